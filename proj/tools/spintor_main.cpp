// spintor — construction, classification and verification of Clifford
// generator actions on torus torsion points.
//
// Subcommands: gens, classify, table1, perms, dynamics, diagram, verify-all.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spintor/classify.hpp"
#include "spintor/cliffperm.hpp"
#include "spintor/dynamics.hpp"
#include "spintor/error.hpp"
#include "spintor/generators.hpp"
#include "spintor/monomial.hpp"
#include "spintor/perm.hpp"
#include "spintor/report.hpp"
#include "spintor/rng.hpp"
#include "spintor/torsion.hpp"

namespace {

using nlohmann::json;
using namespace spintor;

// ------------------------------------------------------------------ plumbing

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f)
    fail("cannot open output file " + out_path);
  f << text;
}

json report_json(const CheckReport& r) {
  return json{{"name", r.name},
              {"checks", r.checks},
              {"failed", r.failed},
              {"ok", r.ok()},
              {"witnesses", r.witnesses}};
}

std::string pad(std::string s, std::size_t w) {
  while (s.size() < w)
    s += ' ';
  return s;
}

std::string word_label(int k, std::uint32_t mask) {
  return generator_label(GeneratorIndex{k, mask, false});
}

std::string switch_bits_str(int k, std::uint32_t bits) {
  std::string s;
  for (int l = k - 1; l >= 0; --l)
    s += (bits >> l & 1) ? '1' : '0';
  return s;
}

// --------------------------------------------------------------------- gens

int cmd_gens(int k, const std::string& format, const std::string& out) {
  std::ostringstream text;
  json j{{"k", k}, {"dim", 1 << k}, {"generators", json::array()}};
  text << "vector generators at k=" << k << " (dim " << (1 << k) << ")\n";
  for (int i = 1; i <= 2 * k; ++i) {
    const MonomialMatrix rep = vector_generator_rep(k, i);
    const std::string shape = perm_cycles_str(shape_of(rep));
    const char* type = entry_type_str(type_of(rep));
    text << "\ne" << i << "  " << type << "  shape " << shape << "\n"
         << mono_str(rep);
    json entries = json::array();
    for (const Unit c : rep.coeff)
      entries.push_back(unit_str(c));
    j["generators"].push_back(json{{"index", i},
                                   {"label", "e" + std::to_string(i)},
                                   {"type", type},
                                   {"shape", shape},
                                   {"rows", rep.row},
                                   {"entries", entries}});
  }
  emit(format == "json" ? j.dump(2) + "\n" : text.str(), out);
  return 0;
}

// ----------------------------------------------------------------- classify

json class_registry_json(const std::vector<ActionClass>& classes) {
  json arr = json::array();
  for (const ActionClass& c : classes) {
    json members = json::array();
    for (std::uint32_t m : c.members)
      members.push_back(word_label(c.k, m));
    arr.push_back(json{{"canonical", c.label()},
                       {"type", entry_type_str(c.entry_type)},
                       {"shape", perm_cycles_str(c.shape)},
                       {"members", members},
                       {"even_count", c.even_members},
                       {"odd_count", c.odd_members}});
  }
  return arr;
}

int cmd_classify(int k, const std::string& format, const std::string& out) {
  const auto classes = classify(k);
  const CheckReport structure = verify_structure_theorem(k);

  if (format == "json") {
    json j{{"k", k},
           {"classes", class_registry_json(classes)},
           {"structure", report_json(structure)}};
    emit(j.dump(2) + "\n", out);
    return structure.ok() ? 0 : 1;
  }

  std::ostringstream text;
  text << "action classes at k=" << k << ": " << classes.size()
       << " classes, " << classes.front().members.size()
       << " unsigned words each\n\n";
  std::size_t label_w = 5, shape_w = 5;
  for (const ActionClass& c : classes) {
    label_w = std::max(label_w, c.label().size());
    shape_w = std::max(shape_w, perm_cycles_str(c.shape).size());
  }
  text << pad("label", label_w + 2) << pad("type", 11) << "even  odd  "
       << pad("shape", shape_w + 2) << "members\n";
  for (const ActionClass& c : classes) {
    text << pad(c.label(), label_w + 2)
         << pad(entry_type_str(c.entry_type), 11)
         << pad(std::to_string(c.even_members), 6)
         << pad(std::to_string(c.odd_members), 5)
         << pad(perm_cycles_str(c.shape), shape_w + 2);
    for (std::size_t t = 0; t < c.members.size(); ++t)
      text << (t ? " " : "") << word_label(c.k, c.members[t]);
    text << "\n";
  }
  text << "\n" << structure.summary() << "\n";
  emit(text.str(), out);
  return structure.ok() ? 0 : 1;
}

// ------------------------------------------------------------------- table1

// Fixed points of one class action over the 2-torsion points, ascending.
std::vector<TorsionPoint> class_fixed_points(const ActionClass& c) {
  const MonomialMatrix rep =
      generator_rep(GeneratorIndex{c.k, c.canonical, false});
  std::vector<TorsionPoint> fixed;
  TorsionPoint moved = TorsionPoint::zero(c.k, 2);
  for_each_torsion(c.k, 2, default_cap, [&](const TorsionPoint& v) {
    monomial_act_into(rep, v, moved);
    if (moved.ent == v.ent)
      fixed.push_back(v);
  });
  return fixed;
}

int cmd_table1(const std::string& format, const std::string& out) {
  const auto classes = classify(2);
  std::ostringstream text;
  json arr = json::array();
  for (const ActionClass& c : classes) {
    if (c.canonical == 0)
      continue; // the identity class fixes everything
    const auto fixed = class_fixed_points(c);
    text << "[" << c.label() << "]";
    json points = json::array();
    for (const TorsionPoint& v : fixed) {
      text << " " << point_label(v);
      points.push_back(point_label(v));
    }
    text << "\n";
    arr.push_back(json{{"id", c.label()}, {"fixed_points", points}});
  }
  if (format == "json")
    emit(json{{"k", 2}, {"n", 2}, {"classes", arr}}.dump(2) + "\n", out);
  else
    emit(text.str(), out);
  return 0;
}

// -------------------------------------------------------------------- perms

int cmd_perms(int k, const std::string& format, const std::string& out) {
  const auto classes = classify(k);
  const CheckReport group = verify_group_structure(k);

  json arr = json::array();
  std::vector<CliffordPermutation> perms;
  for (const ActionClass& c : classes)
    perms.push_back(
        induced_permutation(GeneratorIndex{k, c.canonical, false}));

  if (format == "json") {
    for (std::size_t t = 0; t < classes.size(); ++t) {
      const CliffordPermutation& p = perms[t];
      arr.push_back(json{{"id", classes[t].label()},
                         {"word", p.word()},
                         {"switch_bits", p.switch_bits},
                         {"imaginary", p.imaginary},
                         {"cycles", perm_cycles_str(p.realize())}});
    }
    json j{{"k", k}, {"classes", arr}, {"group", report_json(group)}};
    emit(j.dump(2) + "\n", out);
    return group.ok() ? 0 : 1;
  }

  std::ostringstream text;
  text << "induced permutations at k=" << k << " (" << classes.size()
       << " classes)\n\n";
  std::size_t label_w = 5, word_w = 4;
  for (std::size_t t = 0; t < classes.size(); ++t) {
    label_w = std::max(label_w, classes[t].label().size());
    word_w = std::max(word_w, perms[t].word().size());
  }
  text << pad("class", label_w + 2) << pad("word", word_w + 2)
       << pad("type", 11) << pad("switch", k > 4 ? k + 2 : 8) << "cycles\n";
  for (std::size_t t = 0; t < classes.size(); ++t) {
    const CliffordPermutation& p = perms[t];
    text << pad(classes[t].label(), label_w + 2) << pad(p.word(), word_w + 2)
         << pad(p.imaginary ? "imaginary" : "real", 11)
         << pad(switch_bits_str(k, p.switch_bits), k > 4 ? k + 2 : 8)
         << perm_cycles_str(p.realize()) << "\n";
  }
  text << "\n" << group.summary() << "\n";
  emit(text.str(), out);
  return group.ok() ? 0 : 1;
}

// ----------------------------------------------------------------- dynamics

json dynamics_json(const DynamicsReport& r) {
  return json{{"sigma_cycles", r.sigma_cycles},
              {"n", r.n},
              {"k", r.k},
              {"p", r.p},
              {"q", r.q},
              {"fp_count", r.fp_count},
              {"tc_count", r.tc_count},
              {"product", r.product},
              {"partition_ok", r.partition_ok},
              {"fp_equals_tc", r.fp_equals_tc},
              {"enumerated", r.enumerated},
              {"ok", r.ok},
              {"failures", r.failures}};
}

int cmd_dynamics(int k, int n, const std::string& sigma_text,
                 const std::string& class_id, std::uint64_t cap,
                 std::uint64_t seed, const std::string& format,
                 const std::string& out) {
  if (sigma_text.empty() == class_id.empty())
    fail("dynamics: give exactly one of --sigma and --class");
  EntryPermutation sigma =
      sigma_text.empty()
          ? eta_of(induced_permutation(parse_generator_label(class_id, k)))
          : EntryPermutation::from_perm(k, parse_cycles(sigma_text, 2 << k));
  const DynamicsReport r = verify_counting_laws(sigma, n, cap, seed);

  if (format == "json") {
    emit(dynamics_json(r).dump(2) + "\n", out);
    return r.ok ? 0 : 1;
  }
  std::ostringstream text;
  text << "sigma_cycles: " << r.sigma_cycles << "\n"
       << "n: " << r.n << "\n"
       << "k: " << r.k << "\n"
       << "p: " << r.p << "\n"
       << "q: " << r.q << "\n"
       << "fp_count: " << r.fp_count << "\n"
       << "tc_count: " << r.tc_count << "\n"
       << "product: " << r.product << "\n"
       << "enumerated: " << (r.enumerated ? "yes" : "no (formula counts)")
       << "\n"
       << "partition_ok: " << (r.partition_ok ? "yes" : "NO") << "\n"
       << "fp_equals_tc: " << (r.fp_equals_tc ? "yes" : "no") << "\n"
       << "ok: " << (r.ok ? "yes" : "NO") << "\n";
  for (const std::string& f : r.failures)
    text << "failure: " << f << "\n";
  emit(text.str(), out);
  return r.ok ? 0 : 1;
}

// ------------------------------------------------------------------ diagram

std::string shoelace_text(const std::string& title,
                          const std::vector<int>& to,
                          const std::vector<std::string>& names) {
  std::size_t w = 0;
  for (const std::string& s : names)
    w = std::max(w, s.size());
  std::ostringstream text;
  text << title << "\n\n";
  for (std::size_t i = 0; i < to.size(); ++i)
    text << "  " << pad(names[i], w) << " --> " << names[to[i]] << "\n";
  return text.str();
}

std::string shoelace_svg(const std::string& title, const std::vector<int>& to,
                         const std::vector<std::string>& names,
                         const std::vector<bool>& shaded) {
  const int rows = static_cast<int>(to.size());
  const int row_h = 30, top = 56, width = 340;
  const int height = top + row_h * rows;
  const auto y_at = [&](int i) { return top + row_h * i; };
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
    << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
    << height << "\" font-family=\"monospace\" font-size=\"14\">\n"
    << "  <defs><marker id=\"arr\" viewBox=\"0 0 8 8\" refX=\"7\" refY=\"4\""
    << " markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\">"
    << "<path d=\"M0,0 L8,4 L0,8 z\"/></marker></defs>\n"
    << "  <text x=\"" << width / 2 << "\" y=\"28\" text-anchor=\"middle\">"
    << title << "</text>\n";
  for (int side = 0; side < 2; ++side) {
    const int x = side ? width - 70 : 70;
    for (int i = 0; i < rows; ++i) {
      s << "  <circle cx=\"" << x << "\" cy=\"" << y_at(i) << "\" r=\"14\""
        << " fill=\"" << (shaded[i] ? "#d0d0d0" : "white")
        << "\" stroke=\"black\"/>\n"
        << "  <text x=\"" << x << "\" y=\"" << y_at(i) + 5
        << "\" text-anchor=\"middle\">" << names[i] << "</text>\n";
    }
  }
  for (int i = 0; i < rows; ++i)
    s << "  <line x1=\"" << 70 + 18 << "\" y1=\"" << y_at(i) << "\" x2=\""
      << width - 70 - 18 << "\" y2=\"" << y_at(to[i])
      << "\" stroke=\"black\" marker-end=\"url(#arr)\"/>\n";
  s << "</svg>\n";
  return s.str();
}

int cmd_diagram(int k, const std::string& class_id, const std::string& out) {
  const auto classes = classify(k);
  const ActionClass& c = class_by_label(classes, class_id);
  const CliffordPermutation p =
      induced_permutation(GeneratorIndex{k, c.canonical, false});
  const std::string title =
      "[" + c.label() + "] at k=" + std::to_string(k) + ": " + p.word();

  std::vector<int> to;
  std::vector<std::string> names;
  std::vector<bool> shaded;
  if (p.imaginary) {
    // Matrix-form entry diagram: component l carries a real slot a_l and an
    // imaginary slot b_l; the induced entry permutation crosses the columns.
    const EntryPermutation eta = eta_of(p);
    to = eta.sigma;
    for (int l = 1; l <= (1 << k); ++l) {
      names.push_back("a" + std::to_string(l));
      names.push_back("b" + std::to_string(l));
      shaded.push_back(false);
      shaded.push_back(true);
    }
  } else {
    to = p.realize();
    for (int i = 1; i <= (1 << k); ++i) {
      names.push_back(std::to_string(i));
      shaded.push_back(false);
    }
  }

  std::cout << shoelace_text(title, to, names);
  if (!out.empty()) {
    emit(shoelace_svg(title, to, names, shaded), out);
    std::cout << "\nSVG written to " << out << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- verify-all

// FP = TC and |FP| = 2^(2^k) for every nonidentity class, plus the
// uniqueness of the two universal fixed points, all by full enumeration.
CheckReport fp_tc_suite(int k, std::uint64_t cap) {
  CheckReport r("fixed points vs translation constants at k=" +
                std::to_string(k));
  const auto classes = classify(k);
  std::vector<TorsionPoint> universal;
  bool first = true;
  for (const ActionClass& c : classes) {
    if (c.canonical == 0)
      continue;
    const EntryPermutation eta =
        eta_of(induced_permutation(GeneratorIndex{k, c.canonical, false}));
    const auto fp = fixed_points(eta, 2, cap);
    const auto tc = translation_constants(eta, 2, cap);
    r.check(fp == tc, [&] {
      return "FP != TC for class " + c.label() + " at k=" + std::to_string(k);
    });
    r.check_eq(fp.size(), std::uint64_t{1} << (1 << k),
               "|FP| for class " + c.label());
    if (first) {
      universal = fp;
      first = false;
    } else {
      std::vector<TorsionPoint> merged;
      std::set_intersection(universal.begin(), universal.end(), fp.begin(),
                            fp.end(), std::back_inserter(merged));
      universal = std::move(merged);
    }
  }
  TorsionPoint all_zero = TorsionPoint::zero(k, 2);
  TorsionPoint all_three = TorsionPoint::zero(k, 2);
  for (auto& e : all_three.ent)
    e = 1;
  r.check_eq(universal.size(), 2, "universal fixed point count");
  r.check(std::binary_search(universal.begin(), universal.end(), all_zero),
          [&] { return "zero point not fixed by every class"; });
  r.check(std::binary_search(universal.begin(), universal.end(), all_three),
          [&] { return point_label(all_three) + " not fixed by every class"; });
  return r;
}

// Counting laws on seeded random entry permutations.
CheckReport counting_fuzz(int n, int k_hi, std::uint64_t cap,
                          std::uint64_t seed, int trials) {
  CheckReport r("counting laws on random entry permutations at n=" +
                std::to_string(n));
  SplitMix64 rng{seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n)};
  for (int k = 1; k <= k_hi; ++k) {
    const int m = 2 << k;
    for (int t = 0; t < trials; ++t) {
      std::vector<int> perm = identity_perm(m);
      for (int i = m - 1; i > 0; --i)
        std::swap(perm[i],
                  perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
      const EntryPermutation sigma = EntryPermutation::from_perm(k, perm);
      const DynamicsReport rep = verify_counting_laws(sigma, n, cap, rng.next());
      r.check(rep.ok, [&] {
        std::string msg = "laws failed for sigma=" + sigma.cycles_str() +
                          " n=" + std::to_string(n) +
                          " k=" + std::to_string(k);
        for (const std::string& f : rep.failures)
          msg += "; " + f;
        return msg;
      });
    }
  }
  return r;
}

int cmd_verify_all(int k_max, const std::vector<int>& n_list,
                   std::uint64_t seed, std::uint64_t cap,
                   const std::string& format, const std::string& out) {
  std::vector<CheckReport> suites;
  for (int k = 1; k <= k_max; ++k)
    suites.push_back(clifford_relations_check(k));
  for (int k = 1; k <= k_max; ++k)
    suites.push_back(verify_structure_theorem(k));
  for (int k = 1; k <= std::min(k_max, max_level - 1); ++k)
    suites.push_back(verify_lift_classes(k));
  for (int k = 1; k <= k_max; ++k)
    suites.push_back(verify_group_structure(k));
  for (int k = 1; k <= std::min(k_max, 3); ++k)
    suites.push_back(fp_tc_suite(k, cap));
  for (int n : n_list)
    suites.push_back(counting_fuzz(n, std::min(k_max, 2), cap, seed, 20));

  bool all_ok = true;
  for (const CheckReport& s : suites)
    all_ok = all_ok && s.ok();

  if (format == "json" || !all_ok) {
    json j{{"ok", all_ok}, {"suites", json::array()}};
    for (const CheckReport& s : suites)
      j["suites"].push_back(report_json(s));
    emit(j.dump(2) + "\n", out);
  } else {
    std::ostringstream text;
    for (const CheckReport& s : suites)
      text << s.summary() << "\n";
    text << "\nall " << suites.size() << " suites passed\n";
    emit(text.str(), out);
  }
  return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford generator actions on torus torsion points"};
  app.require_subcommand(1);

  int k = 2;
  int n = 2;
  std::uint64_t seed = 0;
  std::uint64_t cap = default_cap;
  std::string format = "text";
  std::string out;
  std::string sigma_text;
  std::string class_id;
  int k_max = 3;
  std::vector<int> n_list{2, 3, 4};

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--out", out, "write output to this file");
  };

  CLI::App* gens = app.add_subcommand(
      "gens", "print the vector generator matrices, shapes and types");
  gens->add_option("--k", k, "level (dim 2^k)")
      ->required()
      ->check(CLI::Range(1, max_level));
  add_format(gens);

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "partition the generator words into action classes");
  classify_cmd->add_option("--k", k, "level")
      ->required()
      ->check(CLI::Range(1, max_level));
  add_format(classify_cmd);

  CLI::App* table1 = app.add_subcommand(
      "table1", "fixed points of the 7 nonidentity classes at k=2, n=2");
  add_format(table1);

  CLI::App* perms = app.add_subcommand(
      "perms", "induced permutation normal form of every class");
  perms->add_option("--k", k, "level")
      ->required()
      ->check(CLI::Range(1, max_level));
  add_format(perms);

  CLI::App* dynamics = app.add_subcommand(
      "dynamics", "counting laws of an entry permutation on n-torsion");
  dynamics->add_option("--k", k, "level (2^(k+1) entry slots)")
      ->required()
      ->check(CLI::Range(1, max_level));
  dynamics->add_option("--n", n, "torsion order")
      ->check(CLI::Range(2, max_torsion_order))
      ->capture_default_str();
  dynamics->add_option("--sigma", sigma_text,
                       "entry permutation in 1-based cycle notation");
  dynamics->add_option("--class", class_id,
                       "use the entry permutation of this class instead");
  dynamics->add_option("--cap", cap, "enumeration cap")
      ->capture_default_str();
  dynamics->add_option("--seed", seed, "seed for sampled consistency checks")
      ->capture_default_str();
  add_format(dynamics);

  CLI::App* diagram = app.add_subcommand(
      "diagram", "shoelace diagram of a class's realized permutation");
  diagram->add_option("--k", k, "level")
      ->required()
      ->check(CLI::Range(1, 4));
  diagram->add_option("id", class_id, "class id (canonical label, e.g. e14)")
      ->required();
  diagram->add_option("--out", out, "also write an SVG diagram to this file");

  CLI::App* verify = app.add_subcommand(
      "verify-all", "run every verification suite and report");
  verify->add_option("--k-max", k_max, "highest level to sweep")
      ->check(CLI::Range(1, max_level))
      ->capture_default_str();
  verify->add_option("--n", n_list, "torsion orders for the counting fuzz")
      ->check(CLI::Range(2, max_torsion_order))
      ->capture_default_str();
  verify->add_option("--seed", seed, "fuzz seed")->capture_default_str();
  verify->add_option("--cap", cap, "enumeration cap")->capture_default_str();
  add_format(verify);

  int rc = 0;
  gens->callback([&] { rc = cmd_gens(k, format, out); });
  classify_cmd->callback([&] { rc = cmd_classify(k, format, out); });
  table1->callback([&] { rc = cmd_table1(format, out); });
  perms->callback([&] { rc = cmd_perms(k, format, out); });
  dynamics->callback([&] {
    rc = cmd_dynamics(k, n, sigma_text, class_id, cap, seed, format, out);
  });
  diagram->callback([&] { rc = cmd_diagram(k, class_id, out); });
  verify->callback(
      [&] { rc = cmd_verify_all(k_max, n_list, seed, cap, format, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
