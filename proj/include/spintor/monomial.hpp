// Exact arithmetic on monomial matrices over the fourth roots of unity.
//
// A monomial matrix has exactly one nonzero entry per row and per column.
// Every matrix handled here has its nonzero entries in {1, -1, i, -i}, so an
// entry is stored as the exponent of i and the nonzero pattern as the map
// column -> row.  Products and Kronecker products then reduce to index
// composition plus exponent addition mod 4 — no rounding, no complex type.
//
// Indices are 0-based internally; printing converts to the 1-based
// convention used in reports.

#ifndef SPINTOR_MONOMIAL_HPP_
#define SPINTOR_MONOMIAL_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace spintor {

// One of {1, -1, i, -i}, stored as the exponent e with value i^e.
struct Unit {
  std::uint8_t e = 0; // 0..3

  friend bool operator==(Unit a, Unit b) { return a.e == b.e; }
  friend bool operator!=(Unit a, Unit b) { return a.e != b.e; }
};

inline constexpr Unit unit_one{0};
inline constexpr Unit unit_i{1};
inline constexpr Unit unit_minus_one{2};
inline constexpr Unit unit_minus_i{3};

// Multiplication in the cyclic group of fourth roots of unity.
inline Unit unit_mul(Unit u, Unit v) {
  return Unit{static_cast<std::uint8_t>((u.e + v.e) & 3)};
}

inline Unit unit_neg(Unit u) { return unit_mul(u, unit_minus_one); }
inline bool unit_is_real(Unit u) { return (u.e & 1) == 0; }

// "1", "-1", "i" or "-i".
const char* unit_str(Unit u);

// Gaussian-integer value (re, im) of a unit: 1 -> (1,0), i -> (0,1), ...
std::pair<int, int> unit_value(Unit u);

// A real matrix has every nonzero entry in {1,-1}; an imaginary one in
// {i,-i}.  Generator representations always fall in one of the two camps.
enum class EntryType { real, imaginary };

inline const char* entry_type_str(EntryType t) {
  return t == EntryType::real ? "real" : "imaginary";
}

struct MonomialMatrix {
  int dim = 1;             // always a power of two here
  std::vector<int> row;    // column j -> the row holding its nonzero entry
  std::vector<Unit> coeff; // column j -> that entry's value

  // Entry (row[j], j) equals coeff[j]; everything else is zero.

  static MonomialMatrix identity(int dim);

  // True when row is a bijection and the sizes are consistent.
  bool well_formed() const;
};

bool operator==(const MonomialMatrix& a, const MonomialMatrix& b);
inline bool operator!=(const MonomialMatrix& a, const MonomialMatrix& b) {
  return !(a == b);
}

// Exact matrix product M*N; requires matching dimensions.
MonomialMatrix mono_matmul(const MonomialMatrix& m, const MonomialMatrix& n);

// Kronecker product; dim(M x N) = dim(M)*dim(N).
MonomialMatrix mono_kron(const MonomialMatrix& m, const MonomialMatrix& n);

// u*M: rescales every nonzero entry.
MonomialMatrix scalar_mul(Unit u, const MonomialMatrix& m);

// The underlying permutation matrix: nonzero entries replaced by 1,
// returned as the column -> row map.
std::vector<int> shape_of(const MonomialMatrix& m);

// Real or imaginary; throws MixedTypeError when the entries mix camps
// (which signals the input is not a generator representation).
EntryType type_of(const MonomialMatrix& m);

// The four 2x2 building blocks and the 2x2 identity:
//   E1 = [[i,0],[0,-i]]   E2 = [[0,i],[i,0]]
//   E12 = E1*E2 = [[0,-1],[1,0]]   B = i*E12 = [[0,-i],[i,0]]
MonomialMatrix mat_i2();
MonomialMatrix mat_e1();
MonomialMatrix mat_e2();
MonomialMatrix mat_e12();
MonomialMatrix mat_b();

// Dense Gaussian-integer image, row-major (re, im) pairs; bridge to the
// dense test oracle.  Requires dim <= 64.
std::vector<std::pair<int, int>> to_dense(const MonomialMatrix& m);

// Multi-line ASCII rendering, entries from {0, 1, -1, i, -i}.
std::string mono_str(const MonomialMatrix& m);

} // namespace spintor

#endif // SPINTOR_MONOMIAL_HPP_
