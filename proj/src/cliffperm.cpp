#include "spintor/cliffperm.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <utility>

#include "spintor/classify.hpp"
#include "spintor/error.hpp"
#include "spintor/perm.hpp"

namespace spintor {

SwitchPermutation switch_permutation(int k, int j) {
  if (k < 1 || k > max_level)
    fail("switch_permutation: level out of 1.." + std::to_string(max_level));
  if (j < 0 || j >= k)
    fail("switch_permutation: block exponent " + std::to_string(j) +
         " out of 0.." + std::to_string(k - 1));
  SwitchPermutation s;
  s.k = k;
  s.j = j;
  s.perm.resize(std::size_t{1} << k);
  for (std::size_t x = 0; x < s.perm.size(); ++x)
    s.perm[x] = static_cast<int>(x ^ (std::size_t{1} << j));
  return s;
}

std::vector<int> CliffordPermutation::realize() const {
  std::vector<int> perm(std::size_t{1} << k);
  for (std::size_t x = 0; x < perm.size(); ++x)
    perm[x] = static_cast<int>(x ^ switch_bits);
  return perm;
}

std::string CliffordPermutation::word() const {
  std::string out = imaginary ? "i." : "";
  for (int l = k - 1; l >= 0; --l) {
    out += (switch_bits >> l) & 1
               ? "A" + std::to_string(std::uint32_t{1} << l)
               : std::string("(1)");
    if (l > 0)
      out += "o";
  }
  return out;
}

std::uint32_t switch_bits_from_shape(const std::vector<int>& shape) {
  const std::size_t dim = shape.size();
  if (dim < 2 || std::popcount(dim) != 1)
    throw ShapeStructureError("switch_bits_from_shape: size " +
                              std::to_string(dim) +
                              " is not a power of two >= 2");
  if (!is_permutation(shape))
    throw ShapeStructureError("switch_bits_from_shape: not a permutation");
  const int k = std::countr_zero(dim);
  // Level l moves indices across half-blocks of size 2^(l-1): uniformly
  // within their own half (bit clear) or uniformly into the opposite half
  // (bit set).  Any mixture means the shape is not a switch composite.
  std::uint32_t bits = 0;
  for (int l = k - 1; l >= 0; --l) {
    const int first = (shape[0] >> l) ^ 0;
    for (std::size_t x = 1; x < dim; ++x)
      if ((((shape[x] ^ static_cast<int>(x)) >> l) & 1) != (first & 1))
        throw ShapeStructureError(
            "switch_bits_from_shape: mixed block structure at level " +
            std::to_string(l + 1));
    bits |= static_cast<std::uint32_t>(first & 1) << l;
  }
  return bits;
}

CliffordPermutation induced_from_matrix(const MonomialMatrix& m) {
  CliffordPermutation p;
  p.k = std::countr_zero(static_cast<unsigned>(m.dim));
  p.switch_bits = switch_bits_from_shape(shape_of(m));
  p.imaginary = type_of(m) == EntryType::imaginary;
  return p;
}

CliffordPermutation induced_permutation(const GeneratorIndex& g) {
  return induced_from_matrix(generator_rep(g));
}

TorsionPoint clifford_perm_act(const CliffordPermutation& p,
                               const TorsionPoint& v) {
  if (v.n != 2)
    fail("clifford_perm_act: defined on 2-torsion only, got n=" +
         std::to_string(v.n));
  if (v.k != p.k)
    fail("clifford_perm_act: level mismatch");
  TorsionPoint out = v;
  for (int l = 0; l < v.components(); ++l) {
    const std::uint32_t src = static_cast<std::uint32_t>(l) ^ p.switch_bits;
    out.ent[2 * l] = v.ent[2 * src];
    out.ent[2 * l + 1] = v.ent[2 * src + 1];
  }
  return p.imaginary ? unit_scale(unit_i, out) : out;
}

CliffordPermutation compose_clifford(const CliffordPermutation& p,
                                     const CliffordPermutation& q) {
  if (p.k != q.k)
    fail("compose_clifford: level mismatch");
  return CliffordPermutation{p.k, p.switch_bits ^ q.switch_bits,
                             p.imaginary != q.imaginary};
}

CheckReport verify_group_structure(int k) {
  CheckReport report("clifford-group k=" + std::to_string(k));
  if (k < 1 || k > max_level)
    fail("verify_group_structure: level out of 1.." +
         std::to_string(max_level));

  // Switch maps commute pairwise.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const auto a = switch_permutation(k, i).perm;
      const auto b = switch_permutation(k, j).perm;
      report.check(compose_perm(a, b) == compose_perm(b, a), [&] {
        return "switch maps with exponents " + std::to_string(i) + ", " +
               std::to_string(j) + " do not commute";
      });
    }

  // The real composites: an abelian group of order 2^k realized faithfully
  // by XOR, every nonidentity element a fixed-point-free product of 2^(k-1)
  // disjoint transpositions, even for k >= 2.
  const std::uint32_t order = std::uint32_t{1} << k;
  std::vector<std::vector<int>> realized(order);
  for (std::uint32_t bits = 0; bits < order; ++bits)
    realized[bits] = CliffordPermutation{k, bits, false}.realize();
  for (std::uint32_t bits = 1; bits < order; ++bits) {
    const auto& perm = realized[bits];
    const auto cycles = perm_cycles(perm);
    bool transpositions = cycles.size() == std::size_t{1} << (k - 1);
    for (const auto& c : cycles)
      transpositions = transpositions && c.size() == 2;
    bool derangement = true;
    for (std::size_t x = 0; x < perm.size(); ++x)
      derangement = derangement && perm[x] != static_cast<int>(x);
    report.check(transpositions && derangement, [&] {
      return "composite " + CliffordPermutation{k, bits, false}.word() +
             " is not a derangement by disjoint transpositions";
    });
    if (k >= 2)
      report.check(perm_is_even(perm), [&] {
        return "composite " + CliffordPermutation{k, bits, false}.word() +
               " is an odd permutation";
      });
  }
  for (std::uint32_t a = 0; a < order; ++a)
    for (std::uint32_t b = 0; b < order; ++b)
      report.check(
          compose_perm(realized[a], realized[b]) == realized[a ^ b], [&] {
            return "realized composition disagrees with XOR on bits " +
                   std::to_string(a) + ", " + std::to_string(b);
          });

  // Classes against (imaginary, switch_bits): a bijection whose Cayley
  // table is the one of Z_2 x (Z_2)^k.
  const auto classes = classify(k);
  std::vector<std::size_t> class_index(std::uint32_t{1} << (2 * k));
  for (std::size_t t = 0; t < classes.size(); ++t)
    for (std::uint32_t m : classes[t].members)
      class_index[m] = t;
  std::vector<std::pair<bool, std::uint32_t>> pair_of(classes.size());
  std::map<std::pair<bool, std::uint32_t>, std::size_t> seen;
  for (std::size_t t = 0; t < classes.size(); ++t) {
    const auto ind = induced_permutation(
        GeneratorIndex{k, classes[t].canonical, false});
    pair_of[t] = {ind.imaginary, ind.switch_bits};
    seen.try_emplace(pair_of[t], t);
  }
  report.check_eq(seen.size(), classes.size(),
                  "distinct (scalar, switch-bit) images");
  for (std::size_t s = 0; s < classes.size(); ++s)
    for (std::size_t t = 0; t < classes.size(); ++t) {
      const std::size_t product =
          class_index[classes[s].canonical ^ classes[t].canonical];
      const std::pair<bool, std::uint32_t> expect{
          pair_of[s].first != pair_of[t].first,
          pair_of[s].second ^ pair_of[t].second};
      report.check(pair_of[product] == expect, [&] {
        return "Cayley tables differ at " + classes[s].label() + " * " +
               classes[t].label();
      });
    }
  return report;
}

} // namespace spintor
