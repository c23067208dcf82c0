#include "spintor/torsion.hpp"

#include "spintor/error.hpp"
#include "spintor/rng.hpp"

namespace spintor {

namespace {

void require_point(const TorsionPoint& v, const char* where) {
  if (v.k < 1 || v.n < 2 || v.n > max_torsion_order ||
      static_cast<int>(v.ent.size()) != v.entry_count())
    fail(std::string(where) + ": malformed torsion point");
}

void require_same_space(const TorsionPoint& v, const TorsionPoint& w,
                        const char* where) {
  if (v.k != w.k || v.n != w.n)
    fail(std::string(where) + ": operands live in different spaces");
}

} // namespace

TorsionPoint TorsionPoint::zero(int k, int n) {
  if (k < 1)
    fail("TorsionPoint: level must be >= 1");
  if (n < 2 || n > max_torsion_order)
    fail("TorsionPoint: torsion order out of 2.." +
         std::to_string(max_torsion_order));
  TorsionPoint v;
  v.k = k;
  v.n = n;
  v.ent.assign(std::size_t{2} << k, 0);
  return v;
}

std::string point_label(const TorsionPoint& v) {
  require_point(v, "point_label");
  if (v.n != 2)
    fail("point_label: digit notation is defined only at n=2");
  std::string out = "v";
  for (int l = 0; l < v.components(); ++l)
    out += static_cast<char>('0' + quarter_digit(v.ent[2 * l], v.ent[2 * l + 1]));
  return out;
}

TorsionPoint point_from_label(const std::string& label) {
  std::size_t pos = (!label.empty() && label[0] == 'v') ? 1 : 0;
  const std::size_t m = label.size() - pos;
  int k = -1;
  for (int t = 1; t <= 16; ++t)
    if ((std::size_t{1} << t) == m)
      k = t;
  if (k < 0)
    fail("point_from_label: \"" + label +
         "\" needs a power-of-two digit count >= 2");
  TorsionPoint v = TorsionPoint::zero(k, 2);
  for (int l = 0; l < v.components(); ++l) {
    const char c = label[pos + l];
    if (c < '0' || c > '3')
      fail("point_from_label: digit out of 0..3 in \"" + label + "\"");
    v.ent[2 * l] = static_cast<std::uint16_t>((c - '0') & 1);
    v.ent[2 * l + 1] = static_cast<std::uint16_t>((c - '0') >> 1);
  }
  return v;
}

TorsionPoint add_points(const TorsionPoint& v, const TorsionPoint& w) {
  require_point(v, "add_points");
  require_same_space(v, w, "add_points");
  TorsionPoint r = v;
  for (std::size_t t = 0; t < r.ent.size(); ++t)
    r.ent[t] = static_cast<std::uint16_t>((v.ent[t] + w.ent[t]) % v.n);
  return r;
}

TorsionPoint sub_points(const TorsionPoint& v, const TorsionPoint& w) {
  require_point(v, "sub_points");
  require_same_space(v, w, "sub_points");
  TorsionPoint r = v;
  for (std::size_t t = 0; t < r.ent.size(); ++t)
    r.ent[t] = static_cast<std::uint16_t>((v.ent[t] + v.n - w.ent[t]) % v.n);
  return r;
}

TorsionPoint unit_scale(Unit u, const TorsionPoint& v) {
  require_point(v, "unit_scale");
  const int n = v.n;
  TorsionPoint r = v;
  for (int l = 0; l < v.components(); ++l) {
    const int a = v.ent[2 * l];
    const int b = v.ent[2 * l + 1];
    int ra = a, rb = b;
    switch (u.e & 3) {
      case 0: break;
      case 1: ra = (n - b) % n; rb = a; break;          // i*(a+bi) = -b+ai
      case 2: ra = (n - a) % n; rb = (n - b) % n; break;
      case 3: ra = b; rb = (n - a) % n; break;          // -i*(a+bi) = b-ai
    }
    r.ent[2 * l] = static_cast<std::uint16_t>(ra);
    r.ent[2 * l + 1] = static_cast<std::uint16_t>(rb);
  }
  return r;
}

void monomial_act_into(const MonomialMatrix& m, const TorsionPoint& v,
                       TorsionPoint& out) {
  const int n = v.n;
  out.k = v.k;
  out.n = n;
  out.ent.resize(v.ent.size());
  for (int j = 0; j < m.dim; ++j) {
    const int a = v.ent[2 * j];
    const int b = v.ent[2 * j + 1];
    int ra = a, rb = b;
    switch (m.coeff[j].e & 3) {
      case 0: break;
      case 1: ra = (n - b) % n; rb = a; break;
      case 2: ra = (n - a) % n; rb = (n - b) % n; break;
      case 3: ra = b; rb = (n - a) % n; break;
    }
    out.ent[2 * m.row[j]] = static_cast<std::uint16_t>(ra);
    out.ent[2 * m.row[j] + 1] = static_cast<std::uint16_t>(rb);
  }
}

TorsionPoint monomial_act(const MonomialMatrix& m, const TorsionPoint& v) {
  require_point(v, "monomial_act");
  if (m.dim != v.components())
    fail("monomial_act: matrix dim " + std::to_string(m.dim) +
         " vs point dimension " + std::to_string(v.components()));
  TorsionPoint out;
  monomial_act_into(m, v, out);
  return out;
}

std::optional<std::uint64_t> torsion_space_size(int k, int n) {
  std::uint64_t size = 1;
  for (int t = 0; t < (2 << k); ++t) {
    if (size > UINT64_MAX / static_cast<std::uint64_t>(n))
      return std::nullopt;
    size *= static_cast<std::uint64_t>(n);
  }
  return size;
}

std::string pow_str(std::uint64_t n, std::uint64_t e) {
  // Schoolbook decimal: digits little-endian, multiply by n e times.
  std::vector<std::uint32_t> digits{1};
  for (std::uint64_t t = 0; t < e; ++t) {
    std::uint64_t carry = 0;
    for (auto& d : digits) {
      const std::uint64_t x = d * n + carry;
      d = static_cast<std::uint32_t>(x % 10);
      carry = x / 10;
    }
    while (carry) {
      digits.push_back(static_cast<std::uint32_t>(carry % 10));
      carry /= 10;
    }
  }
  std::string out;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it)
    out += static_cast<char>('0' + *it);
  return out;
}

void for_each_torsion(int k, int n, std::uint64_t cap,
                      const std::function<void(const TorsionPoint&)>& fn) {
  const auto size = torsion_space_size(k, n);
  if (!size || *size > cap)
    throw CapExceededError(
        "for_each_torsion: " + pow_str(n, std::uint64_t{2} << k) +
        " points exceed the cap of " + std::to_string(cap));
  TorsionPoint v = TorsionPoint::zero(k, n);
  const int m = v.entry_count();
  for (std::uint64_t t = 0;; ++t) {
    fn(v);
    // Odometer with the last entry fastest: ascending lexicographic order.
    int pos = m - 1;
    while (pos >= 0 && v.ent[pos] == n - 1)
      v.ent[pos--] = 0;
    if (pos < 0)
      break;
    ++v.ent[pos];
  }
}

std::vector<TorsionPoint> enumerate_torsion(int k, int n, std::uint64_t cap) {
  std::vector<TorsionPoint> points;
  const auto size = torsion_space_size(k, n);
  if (size && *size <= cap)
    points.reserve(*size);
  for_each_torsion(k, n, cap,
                   [&](const TorsionPoint& v) { points.push_back(v); });
  return points;
}

std::vector<TorsionPoint> sample_torsion(int k, int n, std::uint64_t count,
                                         std::uint64_t seed) {
  TorsionPoint proto = TorsionPoint::zero(k, n);
  SplitMix64 rng(seed);
  std::vector<TorsionPoint> points(count, proto);
  for (auto& v : points)
    for (auto& e : v.ent)
      e = static_cast<std::uint16_t>(rng.below(static_cast<std::uint64_t>(n)));
  return points;
}

} // namespace spintor
