// Equivalence classes of the signed generator words acting on 2-torsion.
//
// Two words are equivalent when their representations move every 2-torsion
// point identically.  Signs are invisible there (negating residues mod 2
// changes nothing), and the pair (shape, type) of the representation is a
// complete invariant, so the 2^(2k) unsigned words fall into exactly
// 2^(k+1) classes of size 2^(k-1).

#ifndef SPINTOR_CLASSIFY_HPP_
#define SPINTOR_CLASSIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "spintor/generators.hpp"
#include "spintor/monomial.hpp"
#include "spintor/report.hpp"

namespace spintor {

struct ActionClass {
  int k = 1;
  std::vector<int> shape;             // shared by all members (column -> row)
  EntryType entry_type = EntryType::real;
  std::uint32_t canonical = 0;        // shortest member, ties by least mask
  std::vector<std::uint32_t> members; // unsigned member masks, ascending
  int even_members = 0;               // members with even |mu|
  int odd_members = 0;

  std::string label() const;          // canonical member's label, e.g. "e14"
};

// True when the two words act identically on every 2-torsion point.
// Exhaustive comparison for k <= 3; the complete invariant (shape, type)
// beyond that (cross-validated by the test suite on sampled points).
bool actions_equivalent(const GeneratorIndex& g, const GeneratorIndex& h);

// Exhaustive action comparison of two matrices over all of J_2; the
// definition of the equivalence, usable on any monomial matrices.
bool matrix_actions_equal_on_j2(const MonomialMatrix& a,
                                const MonomialMatrix& b);

// Order-insensitive digest of a matrix's action on all of J_2, taken over
// the points in ascending order.  Equal actions give equal fingerprints;
// distinct fingerprints prove distinct actions.
std::uint64_t action_fingerprint_on_j2(const MonomialMatrix& m);

// Partitions the unsigned words at level k into their action classes,
// sorted by canonical mask (identity class first).
std::vector<ActionClass> classify(int k);

// Finds the class containing the given word; classes as produced by
// classify(k).  Throws when the word belongs to no class (cannot happen for
// generator words).
const ActionClass& class_of(const std::vector<ActionClass>& classes,
                            const GeneratorIndex& g);
const ActionClass& class_by_label(const std::vector<ActionClass>& classes,
                                  const std::string& label);

// Checks, for level k: every class has 2^(k-1) unsigned members; there are
// 2^(k+1) classes, half real and half imaginary; exactly 2^k shapes, each
// realized by one real and one imaginary class; within every class the
// even-|mu| and odd-|mu| members are equinumerous.
CheckReport verify_structure_theorem(int k);

// Checks, for level k: two unsigned words produce identical sets of four
// lifted classes at level k+1 exactly when their shapes agree, and disjoint
// sets otherwise.  Exhaustive over all pairs.
CheckReport verify_lift_classes(int k);

} // namespace spintor

#endif // SPINTOR_CLASSIFY_HPP_
