// Monomial representations of the multiplicative Clifford group.
//
// The complex Clifford algebra on 2k anticommuting vector generators acts on
// C^(2^k).  The vector generators map to Kronecker products of 2x2 blocks,
//
//   rho(e_{2j-1}) = I2^{x(k-j)} (x) E1 (x) B^{x(j-1)}
//   rho(e_{2j})   = I2^{x(k-j)} (x) E2 (x) B^{x(j-1)}      (1 <= j <= k)
//
// and a word e_mu = e_{i_1}...e_{i_l} with i_1 < ... < i_l maps to the
// ordered product of the factors.  The signed words +-e_mu form a group of
// order 2^(2k+1) whose representation stays monomial over {1,-1,i,-i}.

#ifndef SPINTOR_GENERATORS_HPP_
#define SPINTOR_GENERATORS_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spintor/monomial.hpp"
#include "spintor/report.hpp"

namespace spintor {

// Maximum level accepted by the enumeration and verification entry points;
// dim 64, 8192 signed words.  Construction itself works above this, but the
// exhaustive sweeps are tuned for desk scale.
inline constexpr int max_level = 6;

// A signed word e_mu (or -e_mu): mu is a strictly increasing subsequence of
// {1,...,2k} stored as a bitmask with bit (i-1) for index i.  The empty mask
// with negative=false is the identity.
struct GeneratorIndex {
  int k = 1;
  std::uint32_t mask = 0;
  bool negative = false;

  int weight() const;               // |mu|
  std::vector<int> indices() const; // mu as increasing 1-based indices

  friend bool operator==(const GeneratorIndex& a, const GeneratorIndex& b) {
    return a.k == b.k && a.mask == b.mask && a.negative == b.negative;
  }
};

// "e14" for mu = {1,4}; "e0" for the identity; indices >= 10 are
// underscore-joined ("e3_10"); a leading "-" marks the negative words.
std::string generator_label(const GeneratorIndex& g);

// Parses the labels produced above ("e14", "-e2", "e0", "e3_10").
GeneratorIndex parse_generator_label(const std::string& text, int k);

// rho(e_i) for a single vector generator, 1 <= i <= 2k.
MonomialMatrix vector_generator_rep(int k, int i);

// rho of a signed word: ordered product over mu, negated when requested.
MonomialMatrix generator_rep(const GeneratorIndex& g);

// The four words at level k+1 whose representations restrict to g's: the
// index shift mu' = mu+2 prefixed with nothing, 1, 2 and 12.  Also checks
// the product identity rho(e_mu') = rho(e_mu) (x) I2 for even |mu| and
// rho(e_mu) (x) B for odd |mu|.  Requires a non-negative word.
std::array<GeneratorIndex, 4> lift_generator(const GeneratorIndex& g);

// All 2^(2k+1) signed words, masks ascending, positive before negative.
std::vector<GeneratorIndex> enumerate_gamma_hat(int k);

// Checks rho(e_i)^2 = -I and rho(e_i)rho(e_j) = -rho(e_j)rho(e_i) for all
// 1 <= i < j <= 2k.
CheckReport clifford_relations_check(int k);

} // namespace spintor

#endif // SPINTOR_GENERATORS_HPP_
