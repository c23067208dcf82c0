#include "spintor/generators.hpp"

#include <bit>

#include "spintor/error.hpp"

namespace spintor {

int GeneratorIndex::weight() const { return std::popcount(mask); }

std::vector<int> GeneratorIndex::indices() const {
  std::vector<int> idx;
  for (int i = 1; i <= 2 * k; ++i)
    if (mask & (1u << (i - 1)))
      idx.push_back(i);
  return idx;
}

std::string generator_label(const GeneratorIndex& g) {
  std::string out = g.negative ? "-e" : "e";
  const auto idx = g.indices();
  if (idx.empty())
    return out + "0";
  bool wide = idx.back() >= 10;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (t && wide)
      out += '_';
    out += std::to_string(idx[t]);
  }
  return out;
}

GeneratorIndex parse_generator_label(const std::string& text, int k) {
  GeneratorIndex g;
  g.k = k;
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') {
    g.negative = true;
    ++pos;
  }
  if (pos >= text.size() || text[pos] != 'e')
    fail("parse_generator_label: expected 'e' in \"" + text + "\"");
  ++pos;
  if (pos == text.size())
    return g; // bare "e": the identity word
  const bool wide = text.find('_', pos) != std::string::npos;
  int prev = 0;
  while (pos < text.size()) {
    if (text[pos] == '_') {
      ++pos;
      continue;
    }
    if (text[pos] < '0' || text[pos] > '9')
      fail("parse_generator_label: bad character in \"" + text + "\"");
    int i = 0;
    if (wide) {
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
        i = i * 10 + (text[pos++] - '0');
    } else {
      i = text[pos++] - '0';
    }
    if (i == 0) {
      if (g.mask || pos != text.size())
        fail("parse_generator_label: index 0 in \"" + text + "\"");
      return g; // "e0": the identity word
    }
    if (i <= prev || i > 2 * k)
      fail("parse_generator_label: indices must increase within 1.." +
           std::to_string(2 * k) + " in \"" + text + "\"");
    prev = i;
    g.mask |= 1u << (i - 1);
  }
  return g;
}

MonomialMatrix vector_generator_rep(int k, int i) {
  if (k < 1)
    fail("vector_generator_rep: level must be >= 1");
  if (i < 1 || i > 2 * k)
    fail("vector_generator_rep: index " + std::to_string(i) +
         " out of 1.." + std::to_string(2 * k));
  const int j = (i + 1) / 2; // which of the k generator pairs
  MonomialMatrix m = (i % 2) ? mat_e1() : mat_e2();
  for (int t = 0; t < j - 1; ++t)
    m = mono_kron(m, mat_b());
  for (int t = 0; t < k - j; ++t)
    m = mono_kron(mat_i2(), m);
  return m;
}

MonomialMatrix generator_rep(const GeneratorIndex& g) {
  MonomialMatrix m = MonomialMatrix::identity(1 << g.k);
  for (int i : g.indices())
    m = mono_matmul(m, vector_generator_rep(g.k, i));
  if (g.negative)
    m = scalar_mul(unit_minus_one, m);
  return m;
}

std::array<GeneratorIndex, 4> lift_generator(const GeneratorIndex& g) {
  if (g.negative)
    fail("lift_generator: expects a non-negative word");
  const std::uint32_t shifted = g.mask << 2; // mu' = mu + 2
  std::array<GeneratorIndex, 4> lifts{};
  for (std::uint32_t prefix = 0; prefix < 4; ++prefix)
    lifts[prefix] = GeneratorIndex{g.k + 1, shifted | prefix, false};
  // The shifted word's representation is the old one padded by I2 (even
  // weight) or by B (odd weight); anything else means a construction bug.
  const MonomialMatrix pad = (g.weight() % 2) ? mat_b() : mat_i2();
  if (generator_rep(lifts[0]) != mono_kron(generator_rep(g), pad))
    fail("lift_generator: shifted word does not restrict to " +
         generator_label(g));
  return lifts;
}

std::vector<GeneratorIndex> enumerate_gamma_hat(int k) {
  if (k < 1 || k > max_level)
    fail("enumerate_gamma_hat: level out of 1.." + std::to_string(max_level));
  std::vector<GeneratorIndex> words;
  words.reserve(std::size_t{2} << (2 * k));
  for (int sign = 0; sign < 2; ++sign)
    for (std::uint32_t mask = 0; mask < (1u << (2 * k)); ++mask)
      words.push_back(GeneratorIndex{k, mask, sign != 0});
  return words;
}

CheckReport clifford_relations_check(int k) {
  CheckReport report("clifford relations at k=" + std::to_string(k));
  if (k < 1 || k > max_level)
    fail("clifford_relations_check: level out of 1.." +
         std::to_string(max_level));
  const MonomialMatrix minus_id =
      scalar_mul(unit_minus_one, MonomialMatrix::identity(1 << k));
  std::vector<MonomialMatrix> rep;
  for (int i = 1; i <= 2 * k; ++i)
    rep.push_back(vector_generator_rep(k, i));
  for (int i = 0; i < 2 * k; ++i) {
    report.check(mono_matmul(rep[i], rep[i]) == minus_id, [&] {
      return "rho(e_" + std::to_string(i + 1) + ")^2 != -I";
    });
    for (int j = i + 1; j < 2 * k; ++j) {
      const MonomialMatrix ij = mono_matmul(rep[i], rep[j]);
      const MonomialMatrix ji = mono_matmul(rep[j], rep[i]);
      report.check(ij == scalar_mul(unit_minus_one, ji), [&] {
        return "rho(e_" + std::to_string(i + 1) + ") and rho(e_" +
               std::to_string(j + 1) + ") do not anticommute";
      });
    }
  }
  return report;
}

} // namespace spintor
