// n-torsion points of the spinor torus, in matrix form.
//
// The torus is C^(2^k) modulo the lattice Z^(2^k) + i*Z^(2^k); its n-torsion
// points are the classes killed by n.  Component l of a point is
// a_l/n + (b_l/n)i with residues a_l, b_l in {0,...,n-1}, and the point is
// stored flat in matrix form: a 2^k x 2 array numbered row-wise, so the
// real numerator of component l sits at flat index 2l and the imaginary one
// at 2l+1 (0-based; reports use the 1-based numbering).
//
// At n = 2 a component is one of the four quarter points
//   v0 = 0, v1 = 1/2, v2 = i/2, v3 = (1+i)/2,
// written as the digit a + 2b; whole points print as v0123-style labels.

#ifndef SPINTOR_TORSION_HPP_
#define SPINTOR_TORSION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spintor/monomial.hpp"

namespace spintor {

inline constexpr std::uint64_t default_cap = std::uint64_t{1} << 24;
inline constexpr int max_torsion_order = 65535;

struct TorsionPoint {
  int k = 1;
  int n = 2;                       // torsion order, 2 <= n <= 65535
  std::vector<std::uint16_t> ent;  // flat matrix-form entries, size 2^(k+1)

  int components() const { return 1 << k; }
  int entry_count() const { return 2 << k; }

  static TorsionPoint zero(int k, int n);

  friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
    return a.k == b.k && a.n == b.n && a.ent == b.ent;
  }
  friend bool operator!=(const TorsionPoint& a, const TorsionPoint& b) {
    return !(a == b);
  }
  // Lexicographic on the flat entries; the canonical set ordering.
  friend bool operator<(const TorsionPoint& a, const TorsionPoint& b) {
    return a.ent < b.ent;
  }
};

// Quarter-point digit a + 2b from a residue pair mod 2, and back.
inline int quarter_digit(int re, int im) { return (re & 1) | ((im & 1) << 1); }
// Digit addition in the Klein four-group (componentwise addition mod 2).
inline int quarter_add(int a, int b) { return a ^ b; }

// "v0123" textual notation; only defined at n = 2.
std::string point_label(const TorsionPoint& v);
// Parses "v0123" (or bare "0123") into a 2-torsion point at the implied k.
TorsionPoint point_from_label(const std::string& label);

// Entrywise sum / difference mod n; operands must share k and n.
TorsionPoint add_points(const TorsionPoint& v, const TorsionPoint& w);
TorsionPoint sub_points(const TorsionPoint& v, const TorsionPoint& w);

// Scalar action of a fourth root of unity, componentwise:
//   1 -> (a, b)        -1 -> (n-a, n-b)
//   i -> (n-b, a)      -i -> (b, n-a)       (all mod n)
TorsionPoint unit_scale(Unit u, const TorsionPoint& v);

// Matrix action: output component row[j] = coeff[j] * (input component j).
// Exact on residues; requires m.dim = 2^k.
TorsionPoint monomial_act(const MonomialMatrix& m, const TorsionPoint& v);
// Allocation-free variant for hot loops; out must not alias v.
void monomial_act_into(const MonomialMatrix& m, const TorsionPoint& v,
                       TorsionPoint& out);

// n^(2^(k+1)) when it fits in 64 bits.
std::optional<std::uint64_t> torsion_space_size(int k, int n);

// Exact decimal string for n^e (may exceed 64 bits).
std::string pow_str(std::uint64_t n, std::uint64_t e);

// Visits every n-torsion point exactly once, in ascending lexicographic
// order on the flat entries, reusing one buffer.  Throws CapExceededError
// when the space is larger than cap.
void for_each_torsion(int k, int n, std::uint64_t cap,
                      const std::function<void(const TorsionPoint&)>& fn);

// Materialized variant for small spaces.
std::vector<TorsionPoint> enumerate_torsion(int k, int n,
                                            std::uint64_t cap = default_cap);

// count seeded pseudo-random points; identical output for identical seeds.
std::vector<TorsionPoint> sample_torsion(int k, int n, std::uint64_t count,
                                         std::uint64_t seed);

} // namespace spintor

#endif // SPINTOR_TORSION_HPP_
