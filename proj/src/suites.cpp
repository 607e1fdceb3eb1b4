#include "grouplab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "grouplab/primes.hpp"

namespace grouplab {

namespace {

// Lazily shared per-member analyses.
struct MemberContext {
  const CorpusEntry* entry = nullptr;
  FiniteGroup g;
  SubgroupLattice lat;

  std::optional<QhResult> qh_;
  std::optional<ModResult> mod_;
  bool base_computed = false;
  std::optional<BaseWitness> base_;
  bool scaling_computed = false;
  std::optional<Subgroup> scaling_;

  const QhResult& qh() {
    if (!qh_) qh_ = is_quasihamiltonian(lat);
    return *qh_;
  }
  const ModResult& mod() {
    if (!mod_) mod_ = is_modular(lat);
    return *mod_;
  }
  const std::optional<BaseWitness>& base() {
    if (!base_computed) {
      base_ = find_base(lat);
      base_computed = true;
    }
    return base_;
  }
  const std::optional<Subgroup>& scaling() {
    if (!scaling_computed) {
      if (base()) scaling_ = find_scaling_subgroup(lat, *base());
      scaling_computed = true;
    }
    return scaling_;
  }
};

std::optional<std::int64_t> p_group_prime(const FiniteGroup& g) {
  const auto fac = factorize(g.order);
  if (fac.size() == 1) return fac[0].first;
  if (g.order == 1) return 2;  // treat the trivial group as a (vacuous) p-group
  return std::nullopt;
}

void merge_report(SuiteEntry& e, const GroupReport& rep, const std::string& prefix = "") {
  for (const CheckItem& c : rep.checks) {
    CheckItem copy = c;
    if (!prefix.empty()) copy.name = prefix + c.name;
    e.checks.push_back(copy);
    if (!copy.pass) e.verdict = Verdict::Fail;
  }
  if (rep.verdict == Verdict::HypothesisNotMet && e.verdict != Verdict::Fail) {
    e.verdict = Verdict::HypothesisNotMet;
    e.note = rep.hypothesis_note;
  }
}

void add_check(SuiteEntry& e, const std::string& name, bool pass, const std::string& detail = "") {
  e.checks.push_back({name, pass, detail});
  if (!pass) e.verdict = Verdict::Fail;
}

std::string members_str(const Subgroup& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.members.size(); ++i) os << (i ? "," : "") << s.members[i];
  os << "}";
  return os.str();
}

std::string qh_witness_str(const QhResult& r) {
  if (!r.witness) return "";
  return " witness X=" + members_str(r.witness->x) + " Y=" + members_str(r.witness->y);
}

std::string mod_witness_str(const ModResult& r) {
  if (!r.witness) return "";
  return " witness X=" + members_str(r.witness->x) + " Y=" + members_str(r.witness->y) +
         " Z=" + members_str(r.witness->z);
}

SuiteEntry run_tqh(MemberContext& ctx) {
  SuiteEntry e;
  e.suite = "tqh";
  const FiniteGroup& g = ctx.g;
  const bool qh = ctx.qh().quasihamiltonian;

  if (auto p = p_group_prime(g)) {
    const TqhVerdict v = classify_tqh_p_group(g, ctx.lat, *p);
    std::ostringstream os;
    os << "classifier=" << (v.kind == TqhKind::Abelian        ? "abelian"
                            : v.kind == TqhKind::Scalar       ? "scalar"
                            : v.kind == TqhKind::Quaternionic ? "quaternionic"
                                                              : "not-tqh")
       << ", bruteforce=" << (qh ? "quasihamiltonian" : "not-quasihamiltonian")
       << qh_witness_str(ctx.qh());
    add_check(e, "p-group-classifier-matches-bruteforce", (v.kind != TqhKind::NotTqh) == qh,
              os.str());
  }

  if (qh) {
    std::int64_t prod = 1;
    bool sylows_ok = true;
    for (std::int64_t p : g.prime_support()) {
      const SigmaElements se = sigma_elements(g, {p});
      if (!se.is_subgroup) {
        sylows_ok = false;
        break;
      }
      Subgroup s = make_subgroup(g, se.elements);
      if (!is_normal(g, s)) {
        sylows_ok = false;
        break;
      }
      prod *= s.order();
    }
    add_check(e, "qh-sylow-parts-normal", sylows_ok);
    add_check(e, "qh-sylow-product-covers-group", sylows_ok && prod == g.order);

    add_check(e, "qh-group-is-near-abelian", static_cast<bool>(ctx.base()));
    if (ctx.base() && ctx.scaling()) {
      const GroupPrimeGraph graph = prime_graph_of_group(g, *ctx.base(), *ctx.scaling());
      bool vertical_only = true;
      for (const GroupGraphEdge& ed : graph.edges)
        if (!ed.vertical) vertical_only = false;
      add_check(e, "qh-prime-graph-edges-vertical", vertical_only);
    }
  }
  return e;
}

SuiteEntry run_modular(MemberContext& ctx) {
  SuiteEntry e;
  e.suite = "modular";
  const FiniteGroup& g = ctx.g;
  const bool qh = ctx.qh().quasihamiltonian;
  const bool mod = ctx.mod().modular;

  add_check(e, "qh-implies-modular", !qh || mod, mod_witness_str(ctx.mod()));
  if (auto p = p_group_prime(g)) {
    (void)p;
    std::ostringstream os;
    os << "modular=" << mod << ", quasihamiltonian=" << qh << mod_witness_str(ctx.mod())
       << qh_witness_str(ctx.qh());
    add_check(e, "p-group-modular-iff-qh", mod == qh, os.str());
  }

  if (mod) {
    add_check(e, "modular-group-is-near-abelian", static_cast<bool>(ctx.base()));
    const ModularMainResult mm = modular_main_check(g, ctx.lat, /*assume_modular=*/true);
    merge_report(e, mm.report);

    if (ctx.base() && ctx.scaling()) {
      const GroupPrimeGraph graph = prime_graph_of_group(g, *ctx.base(), *ctx.scaling());
      bool shape_ok = true;
      std::ostringstream os;
      for (const GroupGraphEdge& ed : graph.edges) {
        if (ed.vertical) {
          if (!std::count(mm.blocks.begin(), mm.blocks.end(), std::set<std::int64_t>{ed.p}))
            shape_ok = false;
        } else {
          if (!std::count(mm.blocks.begin(), mm.blocks.end(),
                          std::set<std::int64_t>{ed.p, ed.q}))
            shape_ok = false;
        }
        os << "(" << ed.p << (ed.vertical ? "|" : "->") << ed.q << ") ";
      }
      add_check(e, "modular-prime-graph-components-match-blocks", shape_ok, os.str());
    }
  }
  return e;
}

SuiteEntry run_iwasawa(MemberContext& ctx) {
  SuiteEntry e;
  e.suite = "iwasawa";
  const FiniteGroup& g = ctx.g;
  const GroupSpec& spec = ctx.entry->spec;

  add_check(e, "iwasawa-factor-modular", ctx.mod().modular);
  add_check(e, "iwasawa-factor-not-quasihamiltonian", !ctx.qh().quasihamiltonian);

  const auto rec = recognize_iwasawa_pq(g, ctx.lat);
  {
    std::ostringstream os;
    if (rec) os << "recognized (p=" << rec->p << ", q=" << rec->q << ")";
    add_check(e, "iwasawa-recognized-with-matching-primes",
              rec && rec->p == spec.p && rec->q == spec.q, os.str());
  }
  if (rec) {
    // Z(G) = {h^p : h in H}, re-verified directly.
    Bits powers(g.order);
    for (elem_t x : rec->scaling.members) {
      elem_t v = 0;
      for (std::int64_t i = 0; i < rec->p; ++i) v = g.op(v, x);
      powers.set(v);
    }
    add_check(e, "iwasawa-center-equals-scaling-p-powers", powers == center(g).bits);
  }

  if (ctx.base() && ctx.scaling()) {
    const GroupPrimeGraph graph = prime_graph_of_group(g, *ctx.base(), *ctx.scaling());
    const bool single = graph.edges.size() == 1 && !graph.edges[0].vertical &&
                        graph.edges[0].p == spec.p && graph.edges[0].q == spec.q;
    std::ostringstream os;
    for (const GroupGraphEdge& ed : graph.edges)
      os << "(" << ed.p << (ed.vertical ? "|" : "->") << ed.q << ") ";
    add_check(e, "iwasawa-prime-graph-single-sloping-edge", single, os.str());
  } else {
    add_check(e, "iwasawa-base-and-scaling-exist", false);
  }
  return e;
}

SuiteEntry run_schur_zassenhaus(MemberContext& ctx) {
  SuiteEntry e;
  e.suite = "schur-zassenhaus";
  const FiniteGroup& g = ctx.g;
  bool equivalences_ok = true;
  bool complements_ok = true;
  bool conjugacy_ok = true;
  int szc_count = 0;
  std::ostringstream bad;
  for (int i = 0; i < ctx.lat.size(); ++i) {
    const Subgroup& n = ctx.lat.subs[i];
    const SzcStatus st = szc_status(g, ctx.lat, n);
    if (!st.equivalent()) {
      equivalences_ok = false;
      bad << "equivalence fails at N=#" << i << " ";
    }
    if (!st.holds()) continue;
    ++szc_count;
    const ComplementResult res = sz_complement(g, ctx.lat, n);
    if (res.complement_count < 1) {
      complements_ok = false;
      bad << "no complement for N=#" << i << " ";
    } else if (!res.all_conjugate) {
      conjugacy_ok = false;
      bad << "non-conjugate complements for N=#" << i << " ";
    }
  }
  {
    std::ostringstream os;
    os << szc_count << " subgroups satisfy the condition";
    add_check(e, "szc-clauses-equivalent-on-normal-subgroups", equivalences_ok, bad.str());
    add_check(e, "sz-complement-exists", complements_ok, os.str());
    add_check(e, "sz-complements-conjugate", conjugacy_ok, bad.str());
  }
  return e;
}

SuiteEntry run_nu(MemberContext& ctx) {
  SuiteEntry e;
  e.suite = "nu";
  merge_report(e, nu_decomposition_check(ctx.g));
  return e;
}

SuiteEntry run_apq(MemberContext& ctx) {
  SuiteEntry e;
  e.suite = "apq";
  if (!ctx.base()) {
    e.verdict = Verdict::HypothesisNotMet;
    e.note = "not near abelian: no base with cyclic quotient";
    return e;
  }
  if (!ctx.base()->nontrivial) {
    e.verdict = Verdict::HypothesisNotMet;
    e.note = "group is A-trivial for its base";
    return e;
  }
  if (!ctx.scaling()) {
    add_check(e, "scaling-subgroup-exists", false);
    return e;
  }
  const GroupPrimeGraph graph = prime_graph_of_group(ctx.g, *ctx.base(), *ctx.scaling());
  merge_report(e, apq_check(ctx.g, *ctx.base(), graph));
  return e;
}

SuiteEntry run_base(MemberContext& ctx) {
  SuiteEntry e;
  e.suite = "base";
  const FiniteGroup& g = ctx.g;
  if (!ctx.base()) {
    e.verdict = Verdict::HypothesisNotMet;
    e.note = "not near abelian: no base with cyclic quotient";
    return e;
  }
  const BaseWitness& w = *ctx.base();
  add_check(e, "scaling-subgroup-exists", static_cast<bool>(ctx.scaling()));
  {
    const Quotient q = quotient_group(g, w.a);
    add_check(e, "base-quotient-inductively-monothetic", is_inductively_monothetic_finite(q.group));
  }
  if (ctx.scaling()) merge_report(e, sandwich_check(g, w.a, *ctx.scaling()), "sandwich-");
  if (w.nontrivial) {
    merge_report(e, cga_az_check(g, ctx.lat, w));
  } else {
    add_check(e, "cga-az-skipped-for-a-trivial-group", true);
  }
  return e;
}

SuiteEntry run_sylow(MemberContext& ctx) {
  SuiteEntry e;
  e.suite = "sylow";
  const FiniteGroup& g = ctx.g;
  if (!ctx.base() || !ctx.base()->nontrivial ||
      !(centralizer(g, ctx.base()->a) == ctx.base()->a)) {
    e.verdict = Verdict::HypothesisNotMet;
    e.note = "requires an A-nontrivial base with A = C_G(A)";
    return e;
  }
  const auto primes = g.prime_support();
  const int np = static_cast<int>(primes.size());
  for (int mask = 1; mask < (1 << np); ++mask) {
    std::set<std::int64_t> sigma;
    std::ostringstream label;
    label << "sigma={";
    for (int i = 0; i < np; ++i)
      if (mask & (1 << i)) {
        label << (sigma.empty() ? "" : ",") << primes[i];
        sigma.insert(primes[i]);
      }
    label << "} ";
    GroupReport rep = sigma_sylow(g, ctx.lat, *ctx.base(), sigma);
    merge_report(e, rep, label.str());
  }
  return e;
}

}  // namespace

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = {
      "tqh", "modular", "iwasawa", "schur-zassenhaus", "nu", "apq", "base", "sylow"};
  return names;
}

SuiteReport run_suites(const std::vector<std::string>& names, const SuiteOptions& opts) {
  for (const std::string& n : names)
    if (std::find(all_suite_names().begin(), all_suite_names().end(), n) ==
        all_suite_names().end())
      throw std::invalid_argument("unknown suite: " + n);

  const std::vector<CorpusEntry> corpus = build_corpus(opts.max_order);
  SuiteReport report;
  for (const CorpusEntry& entry : corpus) {
    MemberContext ctx;
    ctx.entry = &entry;
    ctx.g = construct(entry.spec);
    if (ctx.g.order > opts.lattice_cap) continue;
    ctx.lat = enumerate_subgroups(ctx.g, opts.lattice_cap);

    for (const std::string& name : names) {
      if (name == "iwasawa" && entry.spec.kind != SpecKind::Iwasawa) continue;
      const auto start = std::chrono::steady_clock::now();
      SuiteEntry e;
      if (name == "tqh")
        e = run_tqh(ctx);
      else if (name == "modular")
        e = run_modular(ctx);
      else if (name == "iwasawa")
        e = run_iwasawa(ctx);
      else if (name == "schur-zassenhaus")
        e = run_schur_zassenhaus(ctx);
      else if (name == "nu")
        e = run_nu(ctx);
      else if (name == "apq")
        e = run_apq(ctx);
      else if (name == "base")
        e = run_base(ctx);
      else if (name == "sylow")
        e = run_sylow(ctx);
      e.group = entry.name;
      e.timing_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      switch (e.verdict) {
        case Verdict::Pass: ++report.passed; break;
        case Verdict::Fail: ++report.failed; break;
        case Verdict::HypothesisNotMet: ++report.hypothesis_not_met; break;
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

std::string report_json(const SuiteReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const SuiteEntry& e : report.entries) {
    nlohmann::json je;
    je["suite"] = e.suite;
    je["group_spec"] = e.group;
    je["verdict"] = e.verdict == Verdict::Pass     ? "pass"
                    : e.verdict == Verdict::Fail   ? "fail"
                                                   : "hypothesis-not-met";
    if (!e.note.empty()) je["note"] = e.note;
    nlohmann::json witness = nlohmann::json::array();
    for (const CheckItem& c : e.checks)
      if (!c.pass) witness.push_back({{"check", c.name}, {"detail", c.detail}});
    if (!witness.empty()) je["witness"] = witness;
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckItem& c : e.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
    je["checks"] = checks;
    je["timing_ms"] = e.timing_ms;
    entries.push_back(je);
  }
  nlohmann::json j;
  j["entries"] = entries;
  j["summary"] = {{"pass", report.passed},
                  {"fail", report.failed},
                  {"hypothesis_not_met", report.hypothesis_not_met}};
  return j.dump(2);
}

}  // namespace grouplab
