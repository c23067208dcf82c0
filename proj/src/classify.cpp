#include "spintor/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <utility>

#include "spintor/error.hpp"
#include "spintor/torsion.hpp"

namespace spintor {

namespace {

// 64-bit finalizer (splitmix-style); enough diffusion to accumulate packed
// points into an order-sensitive digest.
std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// Flat entries of a 2-torsion point packed into one word, first entry in the
// highest used bit.
std::uint64_t pack_mod2(const TorsionPoint& v) {
  std::uint64_t bits = 0;
  for (int t = 0; t < v.entry_count(); ++t)
    bits = (bits << 1) | (v.ent[t] & 1);
  return bits;
}

int level_of_dim(int dim) {
  if (dim < 2 || std::popcount(static_cast<unsigned>(dim)) != 1)
    fail("level_of_dim: dimension " + std::to_string(dim) +
         " is not a power of two >= 2");
  return std::countr_zero(static_cast<unsigned>(dim));
}

// Weight-then-mask order; the class member least in it is the canonical
// representative (shortest word, ties broken by smallest indices).
bool rep_less(std::uint32_t a, std::uint32_t b) {
  const int wa = std::popcount(a), wb = std::popcount(b);
  return wa != wb ? wa < wb : a < b;
}

} // namespace

std::string ActionClass::label() const {
  return generator_label(GeneratorIndex{k, canonical, false});
}

bool matrix_actions_equal_on_j2(const MonomialMatrix& a,
                                const MonomialMatrix& b) {
  if (a.dim != b.dim)
    fail("matrix_actions_equal_on_j2: dimensions " + std::to_string(a.dim) +
         " vs " + std::to_string(b.dim));
  const int k = level_of_dim(a.dim);
  const auto size = torsion_space_size(k, 2);
  if (!size || *size > default_cap)
    throw CapExceededError("matrix_actions_equal_on_j2: |J_2| at level " +
                           std::to_string(k) + " exceeds the enumeration cap");
  TorsionPoint v = TorsionPoint::zero(k, 2), oa, ob;
  const int m = v.entry_count();
  for (;;) {
    monomial_act_into(a, v, oa);
    monomial_act_into(b, v, ob);
    if (oa.ent != ob.ent)
      return false;
    int pos = m - 1;
    while (pos >= 0 && v.ent[pos] == 1)
      v.ent[pos--] = 0;
    if (pos < 0)
      return true;
    ++v.ent[pos];
  }
}

std::uint64_t action_fingerprint_on_j2(const MonomialMatrix& m) {
  const int k = level_of_dim(m.dim);
  if (m.dim > 32)
    fail("action_fingerprint_on_j2: packing supports dim <= 32");
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  TorsionPoint out;
  for_each_torsion(k, 2, default_cap, [&](const TorsionPoint& v) {
    monomial_act_into(m, v, out);
    h = mix64(h ^ pack_mod2(out));
  });
  return h;
}

bool actions_equivalent(const GeneratorIndex& g, const GeneratorIndex& h) {
  if (g.k != h.k)
    fail("actions_equivalent: words live at different levels");
  const MonomialMatrix a = generator_rep(g);
  const MonomialMatrix b = generator_rep(h);
  if (g.k <= 3)
    return matrix_actions_equal_on_j2(a, b);
  // Beyond exhaustive reach: shape and type are a complete invariant of the
  // 2-torsion action (cross-validated against sampling in the test suite).
  return shape_of(a) == shape_of(b) && type_of(a) == type_of(b);
}

std::vector<ActionClass> classify(int k) {
  if (k < 1 || k > max_level)
    fail("classify: level out of 1.." + std::to_string(max_level));
  std::map<std::pair<std::vector<int>, int>, std::size_t> index_of;
  std::vector<ActionClass> classes;
  const std::uint32_t word_count = std::uint32_t{1} << (2 * k);
  for (std::uint32_t mask = 0; mask < word_count; ++mask) {
    const MonomialMatrix rep = generator_rep(GeneratorIndex{k, mask, false});
    std::pair<std::vector<int>, int> key{shape_of(rep),
                                         type_of(rep) == EntryType::real ? 0
                                                                         : 1};
    auto [it, fresh] = index_of.try_emplace(key, classes.size());
    if (fresh) {
      ActionClass c;
      c.k = k;
      c.shape = key.first;
      c.entry_type = static_cast<EntryType>(key.second);
      c.canonical = mask;
      classes.push_back(std::move(c));
    }
    ActionClass& c = classes[it->second];
    c.members.push_back(mask);
    if (rep_less(mask, c.canonical))
      c.canonical = mask;
    ++(std::popcount(mask) % 2 == 0 ? c.even_members : c.odd_members);
  }
  std::sort(classes.begin(), classes.end(),
            [](const ActionClass& a, const ActionClass& b) {
              return a.canonical < b.canonical;
            });
  return classes;
}

const ActionClass& class_of(const std::vector<ActionClass>& classes,
                            const GeneratorIndex& g) {
  for (const ActionClass& c : classes)
    if (c.k == g.k &&
        std::binary_search(c.members.begin(), c.members.end(), g.mask))
      return c;
  fail("class_of: word " + generator_label(g) + " matches no class");
}

const ActionClass& class_by_label(const std::vector<ActionClass>& classes,
                                  const std::string& label) {
  if (classes.empty())
    fail("class_by_label: empty class list");
  return class_of(classes, parse_generator_label(label, classes.front().k));
}

CheckReport verify_structure_theorem(int k) {
  CheckReport report("structure-theorem k=" + std::to_string(k));
  const auto classes = classify(k);
  const std::uint64_t class_count = std::uint64_t{1} << (k + 1);
  const std::uint64_t class_size = std::uint64_t{1} << (k - 1);
  report.check_eq(classes.size(), class_count, "class count");

  std::uint64_t real_classes = 0, imaginary_classes = 0;
  std::map<std::vector<int>, std::pair<int, int>> per_shape; // (real, imag)
  for (const ActionClass& c : classes) {
    report.check_eq(c.members.size(), class_size,
                    "size of class " + c.label());
    (c.entry_type == EntryType::real ? real_classes : imaginary_classes)++;
    auto& counts = per_shape[c.shape];
    ++(c.entry_type == EntryType::real ? counts.first : counts.second);
    // Parity balance inside the class.  A one-member class cannot balance,
    // so the count comparison starts at k = 2 (where the trivially-acting
    // words first include odd lengths).
    if (k >= 2)
      report.check(c.even_members == c.odd_members, [&] {
        return "class " + c.label() + ": " + std::to_string(c.even_members) +
               " even-length vs " + std::to_string(c.odd_members) +
               " odd-length members";
      });
    report.check(std::binary_search(c.members.begin(), c.members.end(),
                                    c.canonical),
                 [&] { return "canonical of " + c.label() + " not a member"; });
    // Signs are invisible on 2-torsion: -e acts like e.  Exhaustive where
    // the space allows.
    if (k <= 3) {
      const MonomialMatrix rep =
          generator_rep(GeneratorIndex{k, c.canonical, false});
      report.check(
          matrix_actions_equal_on_j2(rep, scalar_mul(unit_minus_one, rep)),
          [&] { return "negation acts differently on class " + c.label(); });
    }
  }
  report.check_eq(real_classes, class_count / 2, "real class count");
  report.check_eq(imaginary_classes, class_count / 2, "imaginary class count");
  report.check_eq(per_shape.size(), std::uint64_t{1} << k, "distinct shapes");
  for (const auto& [shape, counts] : per_shape)
    report.check(counts.first == 1 && counts.second == 1, [&] {
      return "a shape realized by " + std::to_string(counts.first) +
             " real and " + std::to_string(counts.second) +
             " imaginary classes";
    });
  return report;
}

CheckReport verify_lift_classes(int k) {
  CheckReport report("lift-classes k=" + std::to_string(k));
  if (k < 1 || k + 1 > max_level)
    fail("verify_lift_classes: need 1 <= k <= " + std::to_string(max_level - 1));
  const auto up = classify(k + 1);
  std::vector<std::size_t> class_index(std::size_t{1} << (2 * k + 2));
  for (std::size_t t = 0; t < up.size(); ++t)
    for (std::uint32_t m : up[t].members)
      class_index[m] = t;

  const std::uint32_t word_count = std::uint32_t{1} << (2 * k);
  std::vector<std::array<std::size_t, 4>> lifted(word_count);
  std::vector<std::vector<int>> shapes(word_count);
  for (std::uint32_t m = 0; m < word_count; ++m) {
    const GeneratorIndex g{k, m, false};
    const auto lifts = lift_generator(g);
    for (int t = 0; t < 4; ++t)
      lifted[m][t] = class_index[lifts[t].mask];
    std::sort(lifted[m].begin(), lifted[m].end());
    shapes[m] = shape_of(generator_rep(g));
  }

  for (std::uint32_t a = 0; a < word_count; ++a)
    for (std::uint32_t b = a + 1; b < word_count; ++b) {
      const bool same_shape = shapes[a] == shapes[b];
      if (same_shape) {
        report.check(lifted[a] == lifted[b], [&] {
          return "equal shapes but distinct lift classes: masks " +
                 std::to_string(a) + ", " + std::to_string(b);
        });
      } else {
        std::array<std::size_t, 8> merged;
        const auto end = std::set_union(lifted[a].begin(), lifted[a].end(),
                                        lifted[b].begin(), lifted[b].end(),
                                        merged.begin());
        report.check(end - merged.begin() == 8, [&] {
          return "distinct shapes but overlapping lift classes: masks " +
                 std::to_string(a) + ", " + std::to_string(b);
        });
      }
    }
  return report;
}

} // namespace spintor
