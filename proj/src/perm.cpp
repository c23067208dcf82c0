#include "spintor/perm.hpp"

#include <algorithm>
#include <cctype>

#include "spintor/error.hpp"

namespace spintor {

std::vector<int> identity_perm(int m) {
  std::vector<int> p(m);
  for (int i = 0; i < m; ++i)
    p[i] = i;
  return p;
}

bool is_permutation(const std::vector<int>& p) {
  const int m = static_cast<int>(p.size());
  std::vector<char> seen(m, 0);
  for (int v : p) {
    if (v < 0 || v >= m || seen[v])
      return false;
    seen[v] = 1;
  }
  return true;
}

bool is_identity_perm(const std::vector<int>& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i)
      return false;
  return true;
}

std::vector<int> compose_perm(const std::vector<int>& a,
                              const std::vector<int>& b) {
  if (a.size() != b.size())
    fail("compose_perm: size mismatch");
  std::vector<int> r(a.size());
  for (std::size_t x = 0; x < b.size(); ++x)
    r[x] = a[b[x]];
  return r;
}

std::vector<int> invert_perm(const std::vector<int>& p) {
  std::vector<int> r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    r[p[x]] = static_cast<int>(x);
  return r;
}

bool perm_is_even(const std::vector<int>& p) {
  // Parity is (length - number of cycles) mod 2.
  const int m = static_cast<int>(p.size());
  std::vector<char> seen(m, 0);
  int cycles = 0;
  for (int i = 0; i < m; ++i) {
    if (seen[i])
      continue;
    ++cycles;
    for (int j = i; !seen[j]; j = p[j])
      seen[j] = 1;
  }
  return ((m - cycles) & 1) == 0;
}

std::vector<std::vector<int>> perm_cycles(const std::vector<int>& p,
                                          bool include_trivial) {
  const int m = static_cast<int>(p.size());
  std::vector<char> seen(m, 0);
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < m; ++i) {
    if (seen[i])
      continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    if (cyc.size() > 1 || include_trivial)
      cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::string perm_cycles_str(const std::vector<int>& p) {
  auto cycles = perm_cycles(p, /*include_trivial=*/false);
  if (cycles.empty())
    return "id";
  std::string out;
  for (const auto& cyc : cycles) {
    out += '(';
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      if (t)
        out += ' ';
      out += std::to_string(cyc[t] + 1);
    }
    out += ')';
  }
  return out;
}

std::vector<int> parse_cycles(const std::string& text, int m) {
  std::vector<int> p = identity_perm(m);
  std::vector<char> used(m, 0);
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos == text.size() || text == "id")
    return p;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size())
      break;
    if (text[pos] != '(')
      fail("parse_cycles: expected '(' in \"" + text + "\"");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      while (pos < text.size() &&
             !std::isdigit(static_cast<unsigned char>(text[pos])) &&
             text[pos] != ')')
        ++pos;
      if (pos == text.size())
        fail("parse_cycles: unterminated cycle in \"" + text + "\"");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      int v = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > m)
        fail("parse_cycles: index " + std::to_string(v) + " out of 1.." +
             std::to_string(m));
      if (used[v - 1])
        fail("parse_cycles: repeated index " + std::to_string(v));
      used[v - 1] = 1;
      cyc.push_back(v - 1);
    }
    for (std::size_t t = 0; t < cyc.size(); ++t)
      p[cyc[t]] = cyc[(t + 1) % cyc.size()];
  }
  return p;
}

} // namespace spintor
