// Shared helpers for the test suites.

#ifndef SPINTOR_TESTS_TEST_SUPPORT_HPP_
#define SPINTOR_TESTS_TEST_SUPPORT_HPP_

#include <utility>
#include <vector>

#include "spintor/monomial.hpp"
#include "spintor/rng.hpp"

#include "dense_oracle.hpp"

namespace testsupport {

// Uniform random monomial matrix over the fourth roots of unity.
inline spintor::MonomialMatrix random_monomial(spintor::SplitMix64& rng,
                                               int dim) {
  spintor::MonomialMatrix m = spintor::MonomialMatrix::identity(dim);
  for (int i = dim - 1; i > 0; --i)
    std::swap(m.row[i], m.row[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  for (auto& c : m.coeff)
    c = spintor::Unit{static_cast<std::uint8_t>(rng.below(4))};
  return m;
}

inline oracle::Dense dense_of(const spintor::MonomialMatrix& m) {
  return oracle::Dense{m.dim, spintor::to_dense(m)};
}

} // namespace testsupport

#endif // SPINTOR_TESTS_TEST_SUPPORT_HPP_
