#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grouplab/corpus.hpp"
#include "grouplab/group_spec.hpp"
#include "grouplab/lca.hpp"
#include "grouplab/lattice.hpp"
#include "grouplab/primegraph.hpp"
#include "grouplab/primes.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/suites.hpp"

namespace {

using namespace grouplab;

// Artifacts are written atomically: temp file in place, then rename.
void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + tmp + " for writing");
    os << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot move " + tmp + " to " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

int cmd_graph_master(std::int64_t max_prime, const std::string& dot_path,
                     const std::string& json_path) {
  const MasterGraph g = build_master_graph(max_prime);
  int verticals = 0, slopings = 0;
  for (const Edge& e : g.edges) (e.kind == EdgeKind::Vertical ? verticals : slopings)++;
  std::cout << "master graph up to " << max_prime << ": " << g.index.primes.size()
            << " primes, " << verticals << " vertical and " << slopings << " sloping edges\n";
  if (!dot_path.empty()) write_file_atomic(dot_path, master_graph_dot(g));
  if (!json_path.empty()) write_file_atomic(json_path, master_graph_json(g));
  return 0;
}

int cmd_graph_units(std::int64_t q, int brute_m) {
  std::cout << unit_group_structure(q).str() << "\n";
  if (brute_m > 0)
    std::cout << "mod " << q << "^" << brute_m << ": " << unit_group_bruteforce(q, brute_m).str()
              << "\n";
  return 0;
}

int cmd_lca_saut(const std::string& desc_path) {
  const LcaDescriptor a = descriptor_from_json(read_file(desc_path));
  const SautResult r = saut_decomposition(a);
  if (r.primary.empty()) {
    std::cout << "SAut(A) = 1\n";
  } else {
    for (const auto& [p, d] : r.primary) std::cout << "p=" << p << ": " << d.str() << "\n";
    std::cout << "total: " << r.total().str() << "\n";
  }
  for (const std::string& note : r.notes) std::cout << "note: " << note << "\n";
  return 0;
}

int cmd_lca_classify(const std::string& desc_path) {
  const LcaDescriptor a = descriptor_from_json(read_file(desc_path));
  const ClassifyResult c = classify_inductively_monothetic(a);
  if (!c.accepted) {
    std::cout << "rejected: " << c.reason << "\n";
    return 0;
  }
  auto dump = [](const char* label, const std::set<std::int64_t>& s) {
    std::cout << label << " = {";
    bool first = true;
    for (std::int64_t p : s) {
      std::cout << (first ? "" : ",") << p;
      first = false;
    }
    std::cout << "}\n";
  };
  dump("piA", c.partition.piA);
  dump("piB", c.partition.piB);
  dump("piC", c.partition.piC);
  dump("piD", c.partition.piD);
  const SplitResult split = split_divisible_procyclic(a);
  std::cout << "divisible part: " << descriptor_to_json(split.divisible) << "\n";
  std::cout << "procyclic part: " << descriptor_to_json(split.procyclic) << "\n";
  std::cout << "pi-procyclic: " << (is_pi_procyclic(a) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_group_build(const std::string& spec_path, const std::string& out_path) {
  const GroupSpec spec = spec_from_json(read_file(spec_path));
  const FiniteGroup g = construct(spec);
  std::cout << spec_string(spec) << ": order " << g.order << ", table verified\n";
  if (!out_path.empty()) write_file_atomic(out_path, cayley_table_json(g));
  return 0;
}

int cmd_group_analyze(const std::string& spec_path, int cap, const std::string& dot_path,
                      const std::string& json_path) {
  const GroupSpec spec = spec_from_json(read_file(spec_path));
  const FiniteGroup g = construct(spec);
  std::cout << spec_string(spec) << ": order " << g.order
            << (g.is_abelian() ? ", abelian" : ", nonabelian") << "\n";
  const SubgroupLattice lat = enumerate_subgroups(g, cap);
  std::cout << "subgroups: " << lat.size() << "\n";

  const QhResult qh = is_quasihamiltonian(lat);
  std::cout << "quasihamiltonian: " << (qh.quasihamiltonian ? "yes" : "no");
  if (qh.witness) {
    std::cout << " (witness |X|=" << qh.witness->x.order() << ", |Y|=" << qh.witness->y.order()
              << ")";
  }
  std::cout << "\n";
  const ModResult mod = is_modular(lat);
  std::cout << "modular: " << (mod.modular ? "yes" : "no");
  if (mod.witness)
    std::cout << " (witness |X|=" << mod.witness->x.order() << ", |Y|=" << mod.witness->y.order()
              << ", |Z|=" << mod.witness->z.order() << ")";
  std::cout << "\n";
  if (mod.witness) {
    const Pentagon p = derive_pentagon(g, *mod.witness);
    if (verify_pentagon(g, p))
      std::cout << "pentagon sublattice: orders " << p.bottom.order() << " < {" << p.lower.order()
                << " < " << p.upper.order() << " | " << p.side.order() << "} < " << p.top.order()
                << "\n";
  }

  const auto base = find_base(lat);
  if (base) {
    std::cout << "base: order " << base->a.order()
              << (base->nontrivial ? ", A-nontrivial" : ", A-trivial") << "\n";
    const auto h = find_scaling_subgroup(lat, *base);
    if (h) {
      std::cout << "scaling subgroup: order " << h->order() << "\n";
      const GroupPrimeGraph graph = prime_graph_of_group(g, *base, *h);
      std::cout << "prime graph edges:";
      for (const GroupGraphEdge& e : graph.edges)
        std::cout << " (" << e.p << (e.vertical ? "|" : "->") << e.q << ")";
      std::cout << "\n";
    }
  } else {
    std::cout << "base: none (not near abelian)\n";
  }

  const auto fac = factorize(g.order);
  if (fac.size() == 1) {
    const TqhVerdict v = classify_tqh_p_group(g, lat, fac[0].first);
    std::cout << "p-group class: ";
    switch (v.kind) {
      case TqhKind::Abelian: std::cout << "abelian"; break;
      case TqhKind::Scalar: std::cout << "scalar(s=" << v.s << ")"; break;
      case TqhKind::Quaternionic:
        std::cout << "quaternionic(n=" << v.n << ", |A2|=" << (v.a2 ? v.a2->order() : 1) << ")";
        break;
      case TqhKind::NotTqh: std::cout << "not-tqh"; break;
    }
    std::cout << "\n";
  }
  const auto iw = recognize_iwasawa_pq(g, lat);
  if (iw) std::cout << "iwasawa factor: (p=" << iw->p << ", q=" << iw->q << ")\n";

  if (!dot_path.empty()) write_file_atomic(dot_path, lattice_dot(lat));
  if (!json_path.empty()) write_file_atomic(json_path, lattice_json(lat));
  return 0;
}

int cmd_validate(std::vector<std::string> suites, int max_order, int lattice_cap,
                 const std::string& report_path) {
  if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end())
    suites = all_suite_names();
  SuiteOptions opts;
  opts.max_order = max_order;
  opts.lattice_cap = lattice_cap;
  const SuiteReport report = run_suites(suites, opts);
  for (const SuiteEntry& e : report.entries) {
    if (e.verdict == Verdict::Fail) {
      std::cout << "FAIL " << e.suite << " " << e.group;
      for (const CheckItem& c : e.checks)
        if (!c.pass) std::cout << " [" << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "]";
      std::cout << "\n";
    }
  }
  std::cout << "validate: " << report.passed << " pass, " << report.failed << " fail, "
            << report.hypothesis_not_met << " hypothesis-not-met\n";
  if (!report_path.empty()) write_file_atomic(report_path, report_json(report));
  return report.any_fail() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite and symbolic machinery for near-abelian group structure"};
  app.require_subcommand(1);

  // graph ...
  auto* graph = app.add_subcommand("graph", "prime master-graph and unit-group structure");
  graph->require_subcommand(1);
  auto* master = graph->add_subcommand("master", "build the prime master-graph");
  std::int64_t max_prime = 1000;
  std::string dot_path, json_path;
  master->add_option("--max-prime", max_prime, "largest prime to include")->capture_default_str();
  master->add_option("--dot", dot_path, "write DOT rendering");
  master->add_option("--json", json_path, "write JSON rendering");

  auto* units = graph->add_subcommand("units", "primary structure of the q-adic unit group");
  std::int64_t units_q = 0;
  int brute_m = 0;
  units->add_option("q", units_q, "prime q")->required();
  units->add_option("--brute", brute_m, "also decompose (Z/q^m)^x by brute force");

  // lca ...
  auto* lca = app.add_subcommand("lca", "symbolic periodic abelian descriptors");
  lca->require_subcommand(1);
  auto* saut = lca->add_subcommand("saut", "scalar-automorphism Sylow structure");
  std::string saut_desc;
  saut->add_option("--desc", saut_desc, "descriptor JSON file")->required();
  auto* classify = lca->add_subcommand("classify", "inductively monothetic classification");
  std::string classify_desc;
  classify->add_option("--desc", classify_desc, "descriptor JSON file")->required();

  // group ...
  auto* group = app.add_subcommand("group", "construct and analyze finite groups");
  group->require_subcommand(1);
  auto* build = group->add_subcommand("build", "construct a group from a spec file");
  std::string build_spec, build_out;
  build->add_option("--spec", build_spec, "group spec JSON file")->required();
  build->add_option("--out", build_out, "write the Cayley table JSON");
  auto* analyze = group->add_subcommand("analyze", "structural analysis of a group");
  std::string an_spec, an_dot, an_json;
  int an_cap = kDefaultLatticeOrderCap;
  analyze->add_option("--spec", an_spec, "group spec JSON file")->required();
  analyze->add_option("--lattice-cap", an_cap, "largest order for lattice work")
      ->capture_default_str();
  analyze->add_option("--dot", an_dot, "write the Hasse diagram DOT");
  analyze->add_option("--json", an_json, "write the lattice JSON");

  // validate
  auto* validate = app.add_subcommand("validate", "run validation suites over the corpus");
  std::vector<std::string> suites;
  int max_order = kDefaultLatticeOrderCap;
  int lattice_cap = kDefaultLatticeOrderCap;
  std::string report_path;
  validate->add_option("--suite", suites, "suite name (repeatable) or 'all'");
  validate->add_option("--max-order", max_order, "largest corpus group order")
      ->capture_default_str();
  validate->add_option("--lattice-cap", lattice_cap, "largest order for lattice work")
      ->capture_default_str();
  validate->add_option("--report", report_path, "write the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (master->parsed()) return cmd_graph_master(max_prime, dot_path, json_path);
    if (units->parsed()) return cmd_graph_units(units_q, brute_m);
    if (saut->parsed()) return cmd_lca_saut(saut_desc);
    if (classify->parsed()) return cmd_lca_classify(classify_desc);
    if (build->parsed()) return cmd_group_build(build_spec, build_out);
    if (analyze->parsed()) return cmd_group_analyze(an_spec, an_cap, an_dot, an_json);
    if (validate->parsed())
      return cmd_validate(suites, max_order, lattice_cap, report_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
