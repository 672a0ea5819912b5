// homcolim command-line interface. One job per invocation; all output is
// deterministic (byte-identical across repeated runs on the same input).
// Exit codes: 0 success, 1 unknown command, 2 validation error, 3 internal
// invariant violation.

#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homcolim/acceptance.hpp"
#include "homcolim/cyclic.hpp"
#include "homcolim/fincat.hpp"
#include "homcolim/freegraded.hpp"
#include "homcolim/grouphom.hpp"
#include "homcolim/hochschild.hpp"
#include "homcolim/io.hpp"
#include "homcolim/steinberg.hpp"
#include "homcolim/struct_algebra.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace homcolim;

json homology_to_json(const std::vector<HomologyClassSpace>& h) {
  json out = json::array();
  for (const auto& c : h) {
    json e;
    e["degree"] = c.degree;
    e["dim"] = c.dim;
    json t = json::array();
    for (const auto& f : c.torsion) t.push_back(f.get_str());
    e["torsion"] = t;
    out.push_back(e);
  }
  return out;
}

void print_homology(const char* symbol, const std::vector<HomologyClassSpace>& h) {
  for (const auto& c : h) {
    std::printf("%s_%d: dim %d", symbol, c.degree, c.dim);
    if (!c.torsion.empty()) {
      std::printf("  torsion");
      for (const auto& f : c.torsion) std::printf(" Z/%s", f.get_str().c_str());
    }
    std::printf("\n");
  }
}

void emit(const json& j, bool as_json,
          const std::function<void()>& table) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    table();
}

// Shared per-command state filled by CLI11 option bindings.
struct Options {
  std::string category, functor, group, algebra, presentation;
  std::string ring, quotient, hom;
  int max_degree = 3;
  int max_weight = 0;
  int n = 0;
  int m = 1;
  int size = 3;
  std::string coeff = "default";
  bool as_json = false;
  unsigned seed = 0;
  int threads = 1;
};

int cmd_colim(const Options& o) {
  auto cat = io::parse_category(io::read_file(o.category));
  auto fun = io::parse_functor(io::read_file(o.functor), cat);
  if (o.coeff != "default" && o.coeff != fun.coeff)
    throw validation_error("--coeff disagrees with the functor document's coeff field");
  std::vector<HomologyClassSpace> h =
      fun.coeff == "Q" ? derived_colim(cat.cat, fun.q, o.max_degree)
                       : derived_colim(cat.cat, fun.z, o.max_degree);
  json j;
  j["command"] = "colim";
  j["coeff"] = fun.coeff;
  j["colim"] = homology_to_json(h);
  emit(j, o.as_json, [&] { print_homology("colim", h); });
  return 0;
}

int cmd_group_homology(const Options& o) {
  FinGroup g = io::parse_group(io::read_file(o.group));
  std::string coeff = o.coeff == "default" ? "Z" : o.coeff;
  std::vector<HomologyClassSpace> h;
  if (coeff == "Z")
    h = group_homology(g, trivial_module<Int>(g, 1), o.max_degree);
  else if (coeff == "Q")
    h = group_homology(g, trivial_module<Rat>(g, 1), o.max_degree);
  else
    throw validation_error("--coeff must be Q or Z");
  json j;
  j["command"] = "group-homology";
  j["coeff"] = coeff;
  j["homology"] = homology_to_json(h);
  emit(j, o.as_json, [&] { print_homology("H", h); });
  return 0;
}

// Runs `compute(weight)` ungraded (weight −1) or once per weight 0..W when
// --max-weight was given, printing one block per weight.
int graded_report(const Options& o, const char* command, const char* symbol,
                  const std::function<std::vector<HomologyClassSpace>(int)>& compute) {
  json j;
  j["command"] = command;
  if (o.max_weight <= 0) {
    auto h = compute(-1);
    j["homology"] = homology_to_json(h);
    emit(j, o.as_json, [&] { print_homology(symbol, h); });
    return 0;
  }
  json per = json::array();
  std::vector<std::vector<HomologyClassSpace>> blocks;
  for (int w = 0; w <= o.max_weight; ++w) {
    blocks.push_back(compute(w));
    json e;
    e["weight"] = w;
    e["homology"] = homology_to_json(blocks.back());
    per.push_back(e);
  }
  j["per_weight"] = per;
  emit(j, o.as_json, [&] {
    for (int w = 0; w <= o.max_weight; ++w) {
      std::printf("weight %d\n", w);
      print_homology(symbol, blocks[static_cast<size_t>(w)]);
    }
  });
  return 0;
}

int cmd_hochschild(const Options& o) {
  StructAlgebra a = io::parse_algebra(io::read_file(o.algebra));
  Bimodule m = regular_bimodule(a);
  return graded_report(o, "hochschild", "HH",
                       [&](int w) { return hochschild(a, m, o.max_degree, w); });
}

int cmd_cyclic(const Options& o, bool reduced) {
  StructAlgebra a = io::parse_algebra(io::read_file(o.algebra));
  return graded_report(o, reduced ? "cyclic-reduced" : "cyclic", reduced ? "HCbar" : "HC",
                       [&](int w) { return cyclic_homology(a, o.max_degree, reduced, w); });
}

int cmd_hopf(const Options& o) {
  if (o.max_weight <= 0) throw validation_error("hopf: --max-weight must be positive");
  if (o.n < 0) throw validation_error("hopf: --n must be nonnegative");
  auto doc = io::parse_presentation(io::read_file(o.presentation), o.max_weight);
  GradedPresentation p = doc->presentation();
  std::vector<int> hopf = hopf_hc_odd(p, o.n, o.max_weight);
  std::vector<int> bicx;
  for (int w = 1; w <= o.max_weight; ++w)
    bicx.push_back(
        cyclic_nonunital(doc->target, 2 * o.n + 1, w)[static_cast<size_t>(2 * o.n + 1)].dim);
  bool agree = hopf == bicx;
  json j;
  j["command"] = "hopf";
  j["n"] = o.n;
  j["degree"] = 2 * o.n + 1;
  json per = json::array();
  for (int w = 1; w <= o.max_weight; ++w) {
    json e;
    e["weight"] = w;
    e["hopf"] = hopf[static_cast<size_t>(w - 1)];
    e["bicomplex"] = bicx[static_cast<size_t>(w - 1)];
    per.push_back(e);
  }
  j["per_weight"] = per;
  j["verdict"] = agree ? "AGREE" : "DISAGREE";
  emit(j, o.as_json, [&] {
    std::printf("HC_%d per weight: Hopf formula vs (b,B)-bicomplex\n", 2 * o.n + 1);
    std::printf("%-8s %-8s %-10s\n", "weight", "hopf", "bicomplex");
    for (int w = 1; w <= o.max_weight; ++w)
      std::printf("%-8d %-8d %-10d\n", w, hopf[static_cast<size_t>(w - 1)],
                  bicx[static_cast<size_t>(w - 1)]);
    std::printf("%s\n", agree ? "AGREE" : "DISAGREE");
  });
  return 0;
}

int cmd_lemma56(const Options& o) {
  if (o.max_weight <= 0) throw validation_error("lemma56: --max-weight must be positive");
  if (o.m <= 0) throw validation_error("lemma56: --m must be positive");
  bool ok = lemma56_dimension_check(o.m, o.max_weight);
  json j;
  j["command"] = "lemma56";
  j["m"] = o.m;
  json per = json::array();
  for (int w = 1; w <= o.max_weight; ++w) {
    Int total = 1;
    for (int i = 0; i < w; ++i) total *= o.m;
    Int neck = necklace_count(o.m, w);
    json e;
    e["weight"] = w;
    e["total"] = total.get_str();
    e["necklace"] = neck.get_str();
    e["commutator"] = Int(total - neck).get_str();
    per.push_back(e);
  }
  j["per_weight"] = per;
  j["verdict"] = ok ? "PASS" : "FAIL";
  emit(j, o.as_json, [&] {
    std::printf("%-8s %-10s %-10s %-12s\n", "weight", "m^w", "necklace", "commutator");
    for (const auto& e : j["per_weight"])
      std::printf("%-8d %-10s %-10s %-12s\n", e["weight"].get<int>(),
                  e["total"].get<std::string>().c_str(),
                  e["necklace"].get<std::string>().c_str(),
                  e["commutator"].get<std::string>().c_str());
    std::printf("%s\n", ok ? "PASS" : "FAIL");
  });
  return 0;
}

int cmd_magnus(const Options& o) {
  if (o.max_weight <= 0)
    throw validation_error("magnus-check: --max-weight must be positive");
  auto doc = io::parse_presentation(io::read_file(o.presentation), o.max_weight);
  GradedPresentation p = doc->presentation();
  bool ok = magnus_check(p, o.max_weight);
  json j;
  j["command"] = "magnus-check";
  j["max_weight"] = o.max_weight;
  j["verdict"] = ok ? "PASS" : "FAIL";
  emit(j, o.as_json, [&] {
    std::printf("H_1(F, A^e)_w = (R/R^2)_w for w <= %d: %s\n", o.max_weight,
                ok ? "PASS" : "FAIL");
  });
  return 0;
}

int cmd_sbi(const Options& o) {
  StructAlgebra a = io::parse_algebra(io::read_file(o.algebra));
  SbiResult r = sbi_sequence(a, o.max_degree);
  json j;
  j["command"] = "sbi";
  j["exact"] = r.exact;
  j["shift_identified"] = r.shift_identified;
  j["hh_dims"] = r.hh_dims;
  j["hc_dims"] = r.hc_dims;
  emit(j, o.as_json, [&] {
    std::printf("SBI sequence through degree %d\n", o.max_degree);
    std::printf("exact: %s\n", r.exact ? "yes" : "no");
    std::printf("S-shift identified: %s\n", r.shift_identified ? "yes" : "no");
    std::printf("HH dims:");
    for (int d : r.hh_dims) std::printf(" %d", d);
    std::printf("\nHC dims:");
    for (int d : r.hc_dims) std::printf(" %d", d);
    std::printf("\n");
  });
  return 0;
}

void emit_verdict(const Options& o, const char* command, const SteinbergVerdict& v) {
  json j;
  j["command"] = command;
  j["ok"] = v.ok;
  j["checked"] = v.checked;
  if (!v.ok) j["witness"] = v.witness;
  emit(j, o.as_json, [&] {
    std::printf("%s: %s (%ld identities checked)\n", command, v.ok ? "PASS" : "FAIL",
                v.checked);
    if (!v.ok) std::printf("witness: %s\n", v.witness.c_str());
  });
}

int cmd_steinberg(const Options& o) {
  FiniteRing r = io::parse_ring(io::read_file(o.ring));
  ElementaryContext ctx{&r, o.size};
  emit_verdict(o, "steinberg-check", steinberg_relations_check(ctx));
  return 0;
}

int cmd_gamma(const Options& o) {
  FiniteRing b = io::parse_ring(io::read_file(o.ring));
  FiniteRing a = io::parse_ring(io::read_file(o.quotient));
  RingHom f = io::parse_ring_hom(io::read_file(o.hom), b, a);
  emit_verdict(o, "gamma-check", gamma_generators_trivial(b, a, f, o.size));
  return 0;
}

int cmd_selftest(const Options& o) {
  std::vector<CriterionResult> rs = run_acceptance();
  bool all = true;
  json per = json::array();
  for (const auto& r : rs) {
    all = all && r.pass;
    json e;
    e["criterion"] = r.number;
    e["title"] = r.title;
    e["pass"] = r.pass;
    e["detail"] = r.detail;
    per.push_back(e);
  }
  json j;
  j["command"] = "selftest";
  j["criteria"] = per;
  j["all_pass"] = all;
  emit(j, o.as_json, [&] {
    for (const auto& r : rs)
      std::printf("criterion %2d [%s] %s (%.2fs)\n", r.number, r.pass ? "PASS" : "FAIL",
                  r.title.c_str(), r.seconds);
    std::printf("%s\n", all ? "ALL PASS" : "FAILURES PRESENT");
  });
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  const std::set<std::string> commands = {
      "colim",     "group-homology", "hochschild",      "cyclic",
      "cyclic-reduced", "hopf",      "lemma56",         "magnus-check",
      "sbi",       "steinberg-check", "gamma-check",    "selftest"};
  if (argc < 2) {
    std::fprintf(stderr, "usage: homcolim <command> [options]; commands:");
    for (const auto& c : commands) std::fprintf(stderr, " %s", c.c_str());
    std::fprintf(stderr, "\n");
    return 1;
  }
  std::string first = argv[1];
  if (first != "-h" && first != "--help" && commands.find(first) == commands.end()) {
    std::fprintf(stderr, "unknown command: %s\n", first.c_str());
    return 1;
  }

  CLI::App app{"homcolim: exact-arithmetic homological algebra engine"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_flag("--json", o.as_json, "machine-readable JSON output");
    c->add_option("--seed", o.seed, "seed for randomized property commands");
    c->add_option("--threads", o.threads, "worker threads (accepted; jobs run single-threaded)");
  };

  auto* colim = app.add_subcommand("colim", "derived colimit of a functor over a finite category");
  colim->add_option("--category", o.category, "category document")->required();
  colim->add_option("--functor", o.functor, "functor document")->required();
  colim->add_option("--max-degree", o.max_degree, "top degree (default 3)");
  colim->add_option("--coeff", o.coeff, "Q or Z; must match the functor document");
  add_common(colim);
  colim->callback([&] { exit(cmd_colim(o)); });

  auto* gh = app.add_subcommand("group-homology", "H_n(G; trivial coefficients) via the nerve");
  gh->add_option("--group", o.group, "group document")->required();
  gh->add_option("--max-degree", o.max_degree, "top degree (default 3)");
  gh->add_option("--coeff", o.coeff, "Q or Z (default Z, with torsion)");
  add_common(gh);
  gh->callback([&] { exit(cmd_group_homology(o)); });

  auto* hh = app.add_subcommand("hochschild", "Hochschild homology HH_n(A)");
  hh->add_option("--algebra", o.algebra, "algebra document")->required();
  hh->add_option("--max-degree", o.max_degree, "top degree (default 3)");
  hh->add_option("--max-weight", o.max_weight, "report weights 0..W (graded algebras)");
  add_common(hh);
  hh->callback([&] { exit(cmd_hochschild(o)); });

  auto* cy = app.add_subcommand("cyclic", "cyclic homology HC_n(A) via the (b,B)-bicomplex");
  cy->add_option("--algebra", o.algebra, "algebra document")->required();
  cy->add_option("--max-degree", o.max_degree, "top degree (default 3)");
  cy->add_option("--max-weight", o.max_weight, "report weights 0..W (graded algebras)");
  add_common(cy);
  cy->callback([&] { exit(cmd_cyclic(o, false)); });

  auto* cyr = app.add_subcommand("cyclic-reduced", "reduced cyclic homology via the reduced bicomplex");
  cyr->add_option("--algebra", o.algebra, "algebra document")->required();
  cyr->add_option("--max-degree", o.max_degree, "top degree (default 3)");
  cyr->add_option("--max-weight", o.max_weight, "report weights 0..W (graded algebras)");
  add_common(cyr);
  cyr->callback([&] { exit(cmd_cyclic(o, true)); });

  auto* hp = app.add_subcommand("hopf", "Hopf formula vs bicomplex for HC_{2n+1} of a presented algebra");
  hp->add_option("--presentation", o.presentation, "presentation document")->required();
  hp->add_option("--n", o.n, "computes HC_{2n+1} (default n=0)");
  hp->add_option("--max-weight", o.max_weight, "weights 1..W")->required();
  add_common(hp);
  hp->callback([&] { exit(cmd_hopf(o)); });

  auto* l56 = app.add_subcommand("lemma56", "m^w = necklace(m,w) + dim[F,F]_w dimension identity");
  l56->add_option("--m", o.m, "number of generators")->required();
  l56->add_option("--max-weight", o.max_weight, "weights 1..W")->required();
  add_common(l56);
  l56->callback([&] { exit(cmd_lemma56(o)); });

  auto* mg = app.add_subcommand("magnus-check", "graded H_1 = R/R^2 identity for a presentation");
  mg->add_option("--presentation", o.presentation, "presentation document")->required();
  mg->add_option("--max-weight", o.max_weight, "weights 1..W")->required();
  add_common(mg);
  mg->callback([&] { exit(cmd_magnus(o)); });

  auto* sb = app.add_subcommand("sbi", "SBI long exact sequence HH/HC bookkeeping");
  sb->add_option("--algebra", o.algebra, "algebra document")->required();
  sb->add_option("--max-degree", o.max_degree, "top degree (default 3)");
  add_common(sb);
  sb->callback([&] { exit(cmd_sbi(o)); });

  auto* st = app.add_subcommand("steinberg-check", "Steinberg relations in E_N(R), exhaustive");
  st->add_option("--ring", o.ring, "ring document")->required();
  st->add_option("--size", o.size, "matrix size N >= 3 (default 3)");
  add_common(st);
  st->callback([&] { exit(cmd_steinberg(o)); });

  auto* ga = app.add_subcommand("gamma-check", "triviality of Gamma generators over B x_A B");
  ga->add_option("--ring", o.ring, "ring document for B")->required();
  ga->add_option("--quotient", o.quotient, "ring document for A")->required();
  ga->add_option("--hom", o.hom, "surjection document B -> A")->required();
  ga->add_option("--size", o.size, "matrix size N >= 3 (default 3)");
  add_common(ga);
  ga->callback([&] { exit(cmd_gamma(o)); });

  auto* se = app.add_subcommand("selftest", "run the full acceptance suite");
  add_common(se);
  se->callback([&] { exit(cmd_selftest(o)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const homcolim::validation_error& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const homcolim::internal_error& e) {
    std::fprintf(stderr, "internal invariant violation: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
