// Switch permutations and the induced Clifford permutation normal form.
//
// The switch permutation A_{2^j} pairwise interchanges adjacent blocks of
// size 2^j in {1,...,2^k}, preserving internal order; in 0-based indexing it
// is x -> x XOR 2^j.  A Clifford permutation is a composite
// S_k o ... o S_1 with each S_l either the identity or A_{2^(l-1)},
// optionally prefixed by scalar multiplication by i; its row action realizes
// as x -> x XOR switch_bits.  Every generator word acts on 2-torsion exactly
// like one such composite: the scalar prefix is the entry type and the
// switch bits are read off the shape's recursive two-block structure.
//
// For k >= 2 the 2^k real composites form an abelian subgroup of the
// alternating group on 2^k symbols (every nonidentity element is a
// derangement by 2^(k-1) disjoint transpositions); at k = 1 the single
// nonidentity composite is the odd swap, the one special case.

#ifndef SPINTOR_CLIFFPERM_HPP_
#define SPINTOR_CLIFFPERM_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "spintor/generators.hpp"
#include "spintor/monomial.hpp"
#include "spintor/report.hpp"
#include "spintor/torsion.hpp"

namespace spintor {

struct SwitchPermutation {
  int k = 1;
  int j = 0;               // swaps adjacent blocks of size 2^j
  std::vector<int> perm;   // realized on {0,...,2^k-1}
};

// The block-swap permutation A_{2^j}; requires 0 <= j <= k-1.
SwitchPermutation switch_permutation(int k, int j);

struct CliffordPermutation {
  int k = 1;
  std::uint32_t switch_bits = 0; // bit l-1 set <=> S_l = A_{2^(l-1)}
  bool imaginary = false;        // the leading multiplication by i

  bool is_identity_action() const { return switch_bits == 0 && !imaginary; }

  // The realized row permutation x -> x XOR switch_bits.
  std::vector<int> realize() const;

  // Factor word, outermost first: "A4o(1)oA1"; "(1)" for no switches;
  // imaginary composites get an "i." prefix.
  std::string word() const;

  friend bool operator==(const CliffordPermutation& a,
                         const CliffordPermutation& b) {
    return a.k == b.k && a.switch_bits == b.switch_bits &&
           a.imaginary == b.imaginary;
  }
};

// Reads the switch bits from a shape: at every level l (block size
// 2^(l-1)), each index must move within its own 2^l-block half (bit clear)
// or into the opposite half (bit set), uniformly across the matrix.
// Throws ShapeStructureError otherwise.
std::uint32_t switch_bits_from_shape(const std::vector<int>& shape);

// The composite acting on 2-torsion like the given word: imaginary iff the
// representation is, switch bits from its shape.
CliffordPermutation induced_permutation(const GeneratorIndex& g);
CliffordPermutation induced_from_matrix(const MonomialMatrix& m);

// Applies the composite to a 2-torsion point: component l of the result is
// component sigma(l) of the input (sigma the realized row permutation),
// then the scalar i when imaginary.  Requires v.n = 2 and v.k = p.k.
TorsionPoint clifford_perm_act(const CliffordPermutation& p,
                               const TorsionPoint& v);

// Composition on 2-torsion: switch bits XOR, imaginary flags XOR (the
// scalar i applied twice is -1, invisible mod 2).
CliffordPermutation compose_clifford(const CliffordPermutation& p,
                                     const CliffordPermutation& q);

// Checks, for level k: the switch maps commute pairwise; the 2^k real
// composites form an abelian group in which every nonidentity element is an
// involution and a fixed-point-free product of 2^(k-1) disjoint
// transpositions (an even permutation for k >= 2); and class composition
// through canonical representatives agrees with XOR on the
// (imaginary, switch_bits) pairs — the full Cayley-table comparison.
CheckReport verify_group_structure(int k);

} // namespace spintor

#endif // SPINTOR_CLIFFPERM_HPP_
