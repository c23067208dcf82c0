// Acceptance sweep: eleven end-to-end criteria, one PASS/FAIL line each.
// Time bounds are pinned next to the criteria that carry one; a criterion
// that overruns its bound fails even when every check inside it held.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spintor/classify.hpp"
#include "spintor/cliffperm.hpp"
#include "spintor/dynamics.hpp"
#include "spintor/generators.hpp"
#include "spintor/monomial.hpp"
#include "spintor/perm.hpp"
#include "spintor/rng.hpp"
#include "spintor/torsion.hpp"

using namespace spintor;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& note) {
    if (cond)
      return;
    pass = false;
    if (notes.size() < 12)
      notes.push_back(note);
  }
};

int failures = 0;

// Runs one criterion body, times it, and prints the PASS/FAIL line.
//'bound' is the pinned wall-clock limit in seconds; 0 means untimed.
template <class Body>
void criterion(int number, const std::string& description, double bound,
               Body&& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("unexpected exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (bound > 0 && secs > bound) {
    std::ostringstream msg;
    msg << "took " << std::fixed << std::setprecision(2) << secs
        << "s, bound is " << bound << "s";
    out.require(false, msg.str());
  }

  if (!out.pass)
    ++failures;
  std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << number << ": "
            << description << " (" << std::fixed << std::setprecision(2)
            << secs << "s)\n";
  for (const std::string& note : out.notes)
    std::cout << "       - " << note << "\n";
  std::cout.flush();
}

void note_report(Outcome& out, const CheckReport& r) {
  std::string msg = r.name + ": " + std::to_string(r.failed) + " of " +
                    std::to_string(r.checks) + " checks failed";
  for (const std::string& w : r.witnesses)
    msg += "; " + w;
  out.require(r.ok(), msg);
}

// The pinned level-2 fixed-point table: for each nonidentity class, the
// sixteen 2-torsion points its action leaves in place.
const std::map<std::string, std::vector<std::string>>& pinned_table() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"e1",
       {"v0000", "v0003", "v0030", "v0033", "v0300", "v0303", "v0330",
        "v0333", "v3000", "v3003", "v3030", "v3033", "v3300", "v3303",
        "v3330", "v3333"}},
      {"e2",
       {"v0000", "v0012", "v0021", "v0033", "v1200", "v1212", "v1221",
        "v1233", "v2100", "v2112", "v2121", "v2133", "v3300", "v3312",
        "v3321", "v3333"}},
      {"e3",
       {"v0000", "v0011", "v0022", "v0033", "v1100", "v1111", "v1122",
        "v1133", "v2200", "v2211", "v2222", "v2233", "v3300", "v3311",
        "v3322", "v3333"}},
      {"e4",
       {"v0000", "v0110", "v0220", "v0330", "v1001", "v1111", "v1221",
        "v1331", "v2002", "v2112", "v2222", "v2332", "v3003", "v3113",
        "v3223", "v3333"}},
      {"e14",
       {"v0000", "v0120", "v0210", "v0330", "v1002", "v1122", "v1212",
        "v1332", "v2001", "v2121", "v2211", "v2331", "v3003", "v3123",
        "v3213", "v3333"}},
      {"e24",
       {"v0000", "v0102", "v0201", "v0303", "v1020", "v1122", "v1221",
        "v1323", "v2010", "v2112", "v2211", "v2313", "v3030", "v3132",
        "v3231", "v3333"}},
      {"e34",
       {"v0000", "v0101", "v0202", "v0303", "v1010", "v1111", "v1212",
        "v1313", "v2020", "v2121", "v2222", "v2323", "v3030", "v3131",
        "v3232", "v3333"}},
  };
  return table;
}

// Fixed points of a class's matrix action on the 2-torsion points,
// enumerated directly from the canonical representative.
std::vector<TorsionPoint> matrix_fixed_points(const ActionClass& c) {
  const MonomialMatrix rep =
      generator_rep(GeneratorIndex{c.k, c.canonical, false});
  std::vector<TorsionPoint> fixed;
  TorsionPoint moved = TorsionPoint::zero(c.k, 2);
  for_each_torsion(c.k, 2, default_cap, [&](const TorsionPoint& v) {
    monomial_act_into(rep, v, moved);
    if (moved == v)
      fixed.push_back(v);
  });
  return fixed;
}

void criterion_relations(Outcome& out) {
  for (int k = 1; k <= 5; ++k)
    note_report(out, clifford_relations_check(k));
}

void criterion_unique_actions(Outcome& out) {
  // Bucket the signed words by an action fingerprint, then confirm every
  // within-bucket merge by exhaustive point comparison, so the class count
  // is exact no matter how the fingerprints collide.
  const std::size_t expect[4] = {0, 4, 8, 16};
  for (int k = 1; k <= 3; ++k) {
    std::unordered_map<std::uint64_t, std::vector<MonomialMatrix>> buckets;
    std::size_t distinct = 0;
    for (const GeneratorIndex& g : enumerate_gamma_hat(k)) {
      const MonomialMatrix m = generator_rep(g);
      auto& reps = buckets[action_fingerprint_on_j2(m)];
      const bool seen =
          std::any_of(reps.begin(), reps.end(), [&](const MonomialMatrix& r) {
            return matrix_actions_equal_on_j2(r, m);
          });
      if (!seen) {
        reps.push_back(m);
        ++distinct;
      }
    }
    out.require(distinct == expect[k],
                "k=" + std::to_string(k) + ": " + std::to_string(distinct) +
                    " distinct actions, expected " +
                    std::to_string(expect[k]));
  }
}

void criterion_structure(Outcome& out) {
  for (int k = 1; k <= 5; ++k) {
    note_report(out, verify_structure_theorem(k));

    // Independent recount straight off the registry.
    const auto classes = classify(k);
    const std::string at = "k=" + std::to_string(k) + ": ";
    out.require(classes.size() == (std::size_t{1} << (k + 1)),
                at + "class count " + std::to_string(classes.size()));
    int real_count = 0;
    std::map<std::pair<std::vector<int>, EntryType>, int> shape_type;
    for (const ActionClass& c : classes) {
      out.require(c.members.size() == (std::size_t{1} << (k - 1)),
                  at + "class " + c.label() + " has " +
                      std::to_string(c.members.size()) + " members");
      if (c.entry_type == EntryType::real)
        ++real_count;
      ++shape_type[{c.shape, c.entry_type}];
      if (k >= 2)
        out.require(c.even_members == c.odd_members,
                    at + "class " + c.label() + " splits " +
                        std::to_string(c.even_members) + "/" +
                        std::to_string(c.odd_members) +
                        " between even and odd words");
    }
    out.require(real_count * 2 == static_cast<int>(classes.size()),
                at + std::to_string(real_count) + " real classes");
    out.require(shape_type.size() == classes.size(),
                at + "a (shape, type) pair repeats");
    std::set<std::vector<int>> shapes;
    for (const auto& [key, count] : shape_type) {
      shapes.insert(key.first);
      out.require(count == 1, at + "a (shape, type) pair repeats");
    }
    out.require(shapes.size() == (std::size_t{1} << k),
                at + std::to_string(shapes.size()) + " shapes, expected " +
                    std::to_string(std::size_t{1} << k));
  }
}

void criterion_lifting(Outcome& out) {
  for (int k = 1; k <= 3; ++k)
    note_report(out, verify_lift_classes(k));
}

void criterion_table(Outcome& out) {
  const auto classes = classify(2);
  const auto& table = pinned_table();
  out.require(classes.size() == table.size() + 1, "unexpected class count");
  for (const ActionClass& c : classes) {
    if (c.canonical == 0)
      continue;
    const auto row = table.find(c.label());
    if (row == table.end()) {
      out.require(false, "class " + c.label() + " missing from the table");
      continue;
    }
    std::set<std::string> got;
    for (const TorsionPoint& v : matrix_fixed_points(c))
      got.insert(point_label(v));
    const std::set<std::string> want(row->second.begin(), row->second.end());
    out.require(got == want,
                "class " + c.label() + " fixes the wrong point set");
  }
}

void criterion_fixed_point_counts(Outcome& out) {
  for (int k = 1; k <= 3; ++k) {
    const std::size_t expect = std::size_t{1} << (1 << k);
    for (const ActionClass& c : classify(k)) {
      if (c.canonical == 0)
        continue;
      const auto direct = matrix_fixed_points(c);
      const auto via_eta = fixed_points(
          eta_of(induced_permutation(GeneratorIndex{k, c.canonical, false})),
          2);
      const std::string at =
          "k=" + std::to_string(k) + " class " + c.label() + ": ";
      out.require(direct.size() == expect,
                  at + std::to_string(direct.size()) +
                      " fixed points, expected " + std::to_string(expect));
      out.require(direct == via_eta,
                  at + "matrix and entry-permutation fixed points differ");
    }
  }
}

void criterion_fp_equals_tc(Outcome& out) {
  for (int k = 1; k <= 3; ++k) {
    for (const ActionClass& c : classify(k)) {
      if (c.canonical == 0)
        continue;
      const EntryPermutation eta =
          eta_of(induced_permutation(GeneratorIndex{k, c.canonical, false}));
      out.require(fixed_points(eta, 2) == translation_constants(eta, 2),
                  "k=" + std::to_string(k) + " class " + c.label() +
                      ": fixed points differ from translation constants");
    }
  }
}

void criterion_action_agreement(Outcome& out) {
  // Exhaustive at k <= 3; 10^4 seeded points against every signed word at
  // k = 4, 5.
  for (int k = 1; k <= 5; ++k) {
    const std::vector<TorsionPoint> points =
        k <= 3 ? enumerate_torsion(k, 2)
               : sample_torsion(k, 2, 10000, 0x5eedacce00ull + k);
    std::uint64_t mismatches = 0;
    for (const GeneratorIndex& g : enumerate_gamma_hat(k)) {
      const MonomialMatrix rep = generator_rep(g);
      const CliffordPermutation perm = induced_permutation(g);
      TorsionPoint via_matrix = TorsionPoint::zero(k, 2);
      for (const TorsionPoint& v : points) {
        monomial_act_into(rep, v, via_matrix);
        if (via_matrix != clifford_perm_act(perm, v))
          ++mismatches;
      }
    }
    out.require(mismatches == 0, "k=" + std::to_string(k) + ": " +
                                     std::to_string(mismatches) +
                                     " point mismatches");
  }
}

void criterion_group_structure(Outcome& out) {
  for (int k = 2; k <= 6; ++k)
    note_report(out, verify_group_structure(k));

  // Realized permutations are pairwise distinct and even, so the real
  // composites sit inside Alt(2^k) as a subgroup of order 2^k.
  for (int k = 2; k <= 6; ++k) {
    std::set<std::vector<int>> realized;
    bool all_even = true;
    for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
      const std::vector<int> p = CliffordPermutation{k, bits, false}.realize();
      all_even = all_even && perm_is_even(p);
      realized.insert(p);
    }
    out.require(realized.size() == (std::size_t{1} << k),
                "k=" + std::to_string(k) + ": realized permutations collide");
    out.require(all_even,
                "k=" + std::to_string(k) + ": an odd permutation appears");
  }

  // Exhaustive Cayley-table comparison with the direct product of the sign
  // flag and the switch-bit group, for k <= 4.
  for (int k = 1; k <= 4; ++k) {
    const auto classes = classify(k);
    std::vector<CliffordPermutation> perms;
    std::set<std::pair<bool, std::uint32_t>> coords;
    for (const ActionClass& c : classes) {
      perms.push_back(
          induced_permutation(GeneratorIndex{k, c.canonical, false}));
      coords.insert({perms.back().imaginary, perms.back().switch_bits});
    }
    out.require(coords.size() == classes.size(),
                "k=" + std::to_string(k) +
                    ": classes do not biject onto (flag, bits) pairs");
    bool table_ok = true;
    for (const CliffordPermutation& a : perms)
      for (const CliffordPermutation& b : perms) {
        const CliffordPermutation ab = compose_clifford(a, b);
        const CliffordPermutation ba = compose_clifford(b, a);
        table_ok = table_ok && ab.switch_bits == (a.switch_bits ^ b.switch_bits) &&
                   ab.imaginary == (a.imaginary != b.imaginary) &&
                   ba.switch_bits == ab.switch_bits &&
                   ba.imaginary == ab.imaginary;
      }
    out.require(table_ok, "k=" + std::to_string(k) +
                              ": Cayley table differs from the product group");
  }
}

void criterion_counting_laws(Outcome& out) {
  // The two worked examples, then seeded random entry permutations.
  const EntryPermutation pinned =
      EntryPermutation::from_perm(2, parse_cycles("(1 7)(2 8)", 8));
  const DynamicsReport r = verify_counting_laws(pinned, 2);
  out.require(r.ok && r.fp_count == "64" && r.tc_count == "4" &&
                  r.product == "256",
              "(1 7)(2 8) at n=2: got |FP|=" + r.fp_count +
                  ", |TC|=" + r.tc_count + ", product " + r.product);

  const EntryPermutation swap_cols =
      EntryPermutation::from_perm(1, parse_cycles("(1 2)(3 4)", 4));
  const auto fp = fixed_points(swap_cols, 4);
  const auto tc = translation_constants(swap_cols, 4);
  std::vector<TorsionPoint> both;
  std::set_intersection(fp.begin(), fp.end(), tc.begin(), tc.end(),
                        std::back_inserter(both));
  out.require(fp.size() == 16 && tc.size() == 16 && both.size() == 4,
              "column swap at n=4: |FP|=" + std::to_string(fp.size()) +
                  ", |TC|=" + std::to_string(tc.size()) + ", common " +
                  std::to_string(both.size()));

  SplitMix64 rng{0x5eedacce};
  for (int n : {2, 3, 4, 5})
    for (int k = 1; k <= 2; ++k) {
      int bad = 0;
      for (int t = 0; t < 100; ++t) {
        std::vector<int> perm = identity_perm(2 << k);
        for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i)
          std::swap(perm[i],
                    perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        const EntryPermutation sigma =
            EntryPermutation::from_perm(k, std::move(perm));
        if (!verify_counting_laws(sigma, n, default_cap, rng.next()).ok)
          ++bad;
      }
      out.require(bad == 0, "n=" + std::to_string(n) +
                                " k=" + std::to_string(k) + ": " +
                                std::to_string(bad) + " of 100 failed");
    }
}

void criterion_negative_witness(Outcome& out) {
  // Scaling entries by fourth roots of unity changes the multiset of
  // residues at n > 2, which relocating entries never can.
  for (int n : {3, 4})
    for (int k = 1; k <= 2; ++k) {
      const MonomialMatrix rep = generator_rep(GeneratorIndex{k, 1, false});
      TorsionPoint ones = TorsionPoint::zero(k, n);
      for (auto& e : ones.ent)
        e = 1;
      const TorsionPoint moved = monomial_act(rep, ones);
      std::multiset<std::uint16_t> before(ones.ent.begin(), ones.ent.end());
      std::multiset<std::uint16_t> after(moved.ent.begin(), moved.ent.end());
      out.require(before != after, "n=" + std::to_string(n) +
                                       " k=" + std::to_string(k) +
                                       ": residue multiset did not change");
    }
  // Sanity: at n = 2 the same action does preserve the multiset.
  const MonomialMatrix rep = generator_rep(GeneratorIndex{1, 1, false});
  TorsionPoint ones = TorsionPoint::zero(1, 2);
  for (auto& e : ones.ent)
    e = 1;
  const TorsionPoint moved = monomial_act(rep, ones);
  out.require(std::multiset<std::uint16_t>(ones.ent.begin(), ones.ent.end()) ==
                  std::multiset<std::uint16_t>(moved.ent.begin(),
                                               moved.ent.end()),
              "n=2 sanity check failed");
}

} // namespace

int main() {
  criterion(1, "generator relations hold exactly for k = 1..5", 1.0,
            criterion_relations);
  criterion(2, "exhaustive action comparison yields 4, 8, 16 classes", 30.0,
            criterion_unique_actions);
  criterion(3, "action-class structure holds for k = 1..5", 5.0,
            criterion_structure);
  criterion(4, "lifted class sets match exactly when shapes do, k = 1..3",
            60.0, criterion_lifting);
  criterion(5, "the seven nonidentity level-2 classes fix the pinned table",
            1.0, criterion_table);
  criterion(6, "every nonidentity class fixes exactly 2^(2^k) points, k <= 3",
            30.0, criterion_fixed_point_counts);
  criterion(7, "fixed points equal translation constants at n = 2, k <= 3", 0,
            criterion_fp_equals_tc);
  criterion(8, "induced permutations reproduce the matrix action per point", 0,
            criterion_action_agreement);
  criterion(9, "composites form the expected group inside Alt(2^k)", 0,
            criterion_group_structure);
  criterion(10, "counting laws hold on pinned and random entry permutations",
            60.0, criterion_counting_laws);
  criterion(11, "entrywise scaling at n = 3, 4 is no entry relocation", 0,
            criterion_negative_witness);

  std::cout << (11 - failures) << "/11 criteria passed\n";
  return failures;
}
