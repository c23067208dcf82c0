// Fixed points, translation constants and responsibility sets of
// entry-permuting maps on the n-torsion points.
//
// A permutation sigma of the 2^(k+1) matrix-form entry indices induces the
// map A with (A.w)[sigma(i)] = w[i].  Writing sigma as disjoint cycles with
// p nontrivial and q trivial ones:
//   FP(A)  = points constant on every cycle,           |FP| = n^(p+q);
//   TC(A)  = image of w -> A.w - w  (the translation constant of w),
//            = points whose entries sum to 0 around every cycle;
//   r_A(v) = the fiber {w : A.w = v + w}, size n^(p+q), and the fibers
//            partition J_n, giving |TC|*|FP| = n^(2^(k+1)).
// The composites' entry permutations eta are derangements by disjoint
// transpositions, for which FP = TC as sets at n = 2.

#ifndef SPINTOR_DYNAMICS_HPP_
#define SPINTOR_DYNAMICS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "spintor/cliffperm.hpp"
#include "spintor/torsion.hpp"

namespace spintor {

struct EntryPermutation {
  int k = 1;
  std::vector<int> sigma;               // 0-based images on 2^(k+1) indices
  std::vector<std::vector<int>> cycles; // disjoint cycles incl. trivial ones
  int p = 0;                            // nontrivial cycle count
  int q = 0;                            // trivial cycle count

  int entry_count() const { return 2 << k; }

  // Derangement by disjoint transpositions: q = 0 and all cycles are 2-cycles.
  bool is_transposition_derangement() const;

  // Validates sigma and caches the cycle decomposition.
  static EntryPermutation from_perm(int k, std::vector<int> sigma);

  // 1-based nontrivial cycles, e.g. "(1 7)(2 8)"; "id" for the identity.
  std::string cycles_str() const;
};

// The entry permutation realized by a composite on matrix forms: the row
// permutation acting on index pairs, composed with the within-row swap
// (2l-1 <-> 2l) when the composite is imaginary.  Agrees with
// clifford_perm_act on every 2-torsion point.
EntryPermutation eta_of(const CliffordPermutation& p);

// (A.w)[sigma(i)] = w[i]; requires sigma.k = w.k.
TorsionPoint entry_act(const EntryPermutation& sigma, const TorsionPoint& w);

// The unique v with A.w = v + w.
TorsionPoint translation_constant(const EntryPermutation& sigma,
                                  const TorsionPoint& w);

// True when v is a translation constant of sigma on J_n: its entries sum
// to 0 mod n around every cycle.
bool is_translation_constant(const EntryPermutation& sigma,
                             const TorsionPoint& v);

// All fixed points, ascending; |FP| = n^(p+q).  Throws CapExceededError
// when that count exceeds cap.
std::vector<TorsionPoint> fixed_points(const EntryPermutation& sigma, int n,
                                       std::uint64_t cap = default_cap);

// The image of w -> A.w - w over all of J_n, ascending; requires the whole
// space within cap.
std::vector<TorsionPoint> translation_constants(const EntryPermutation& sigma,
                                                int n,
                                                std::uint64_t cap = default_cap);

// The fiber of v, ascending: one free value per cycle, the rest forced.
// Throws NotTranslationConstantError when v is not in TC.
std::vector<TorsionPoint> responsibility_set(const EntryPermutation& sigma,
                                             const TorsionPoint& v, int n,
                                             std::uint64_t cap = default_cap);

// Outcome of the counting-law verification for one (sigma, n).
struct DynamicsReport {
  std::string sigma_cycles;
  int n = 2;
  int k = 1;
  int p = 0;
  int q = 0;
  std::string fp_count;     // exact decimal (may exceed 64 bits)
  std::string tc_count;
  std::string product;      // |TC| * |FP|, must equal n^(2^(k+1))
  bool enumerated = false;  // true: counts measured by full enumeration;
                            // false: counts from the proven formulas
  bool partition_ok = false;
  bool fp_equals_tc = false;
  bool ok = false;          // every verified law held
  std::vector<std::string> failures;
};

// Verifies the counting laws for sigma on J_n.  Within cap: enumerates the
// whole space, groups it into responsibility fibers, and checks |FP| =
// n^(p+q), every fiber of that same size, the fibers partitioning J_n,
// |TC|*|FP| = n^(2^(k+1)), and whether FP = TC as sets.  Beyond cap:
// reports the formula counts, marks them as such, and runs a seeded
// 10^4-point consistency check (every sampled constant passes the
// cycle-sum membership test; sampled fixed points stay fixed).
DynamicsReport verify_counting_laws(const EntryPermutation& sigma, int n,
                                    std::uint64_t cap = default_cap,
                                    std::uint64_t seed = 0);

} // namespace spintor

#endif // SPINTOR_DYNAMICS_HPP_
