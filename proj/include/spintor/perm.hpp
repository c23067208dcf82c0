// Small permutation utilities: composition, cycles, parity, parsing.
//
// A permutation on {0,...,m-1} is a vector<int> p with image p[x].  All
// storage is 0-based; cycle notation in reports is 1-based.

#ifndef SPINTOR_PERM_HPP_
#define SPINTOR_PERM_HPP_

#include <string>
#include <vector>

namespace spintor {

std::vector<int> identity_perm(int m);
bool is_permutation(const std::vector<int>& p);
bool is_identity_perm(const std::vector<int>& p);

// (a o b)[x] = a[b[x]]: apply b first.
std::vector<int> compose_perm(const std::vector<int>& a,
                              const std::vector<int>& b);
std::vector<int> invert_perm(const std::vector<int>& p);

// True when p is an even permutation.
bool perm_is_even(const std::vector<int>& p);

// Disjoint cycles, each rotated to start at its least element, sorted by
// that element.  include_trivial keeps the length-1 cycles.
std::vector<std::vector<int>> perm_cycles(const std::vector<int>& p,
                                          bool include_trivial = false);

// 1-based cycle notation such as "(1 3)(2 4)"; "id" for the identity.
std::string perm_cycles_str(const std::vector<int>& p);

// Parses 1-based cycle notation, e.g. "(1 7)(2 8)" or "(1,7)(2,8)", into a
// permutation on {0,...,m-1}.  Indices not mentioned stay fixed.  Throws on
// out-of-range or repeated indices.
std::vector<int> parse_cycles(const std::string& text, int m);

} // namespace spintor

#endif // SPINTOR_PERM_HPP_
