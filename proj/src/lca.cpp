#include "grouplab/lca.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "grouplab/primes.hpp"

namespace grouplab {

bool LcaDescriptor::trivial() const { return support().empty(); }

std::vector<std::int64_t> LcaDescriptor::support() const {
  std::vector<std::int64_t> out;
  for (const auto& [p, c] : comps)
    if (!c.trivial()) out.push_back(p);
  return out;
}

ClassifyResult classify_inductively_monothetic(const LcaDescriptor& a) {
  ClassifyResult r;
  for (const auto& [p, c] : a.comps) {
    if (c.trivial()) continue;
    switch (c.kind) {
      case CompKind::Qp: r.partition.piA.insert(p); break;
      case CompKind::Prufer: r.partition.piB.insert(p); break;
      case CompKind::Zp: r.partition.piC.insert(p); break;
      case CompKind::Cyclic: r.partition.piD.insert(p); break;
      case CompKind::GeneralAbelian: {
        r.accepted = false;
        r.offending_prime = p;
        std::ostringstream os;
        os << "not inductively monothetic: component at p=" << p
           << " is not among Qp/Prufer/Zp/Cyclic";
        r.reason = os.str();
        return r;
      }
    }
  }
  r.accepted = true;
  return r;
}

SplitResult split_divisible_procyclic(const LcaDescriptor& a) {
  ClassifyResult c = classify_inductively_monothetic(a);
  if (!c.accepted) throw std::invalid_argument(c.reason);
  SplitResult out;
  for (const auto& [p, comp] : a.comps) {
    if (comp.trivial()) continue;
    if (comp.kind == CompKind::Qp || comp.kind == CompKind::Prufer)
      out.divisible.comps[p] = comp;
    else
      out.procyclic.comps[p] = comp;
  }
  return out;
}

bool is_pi_procyclic(const LcaDescriptor& a) {
  for (const auto& [p, c] : a.comps) {
    (void)p;
    if (c.trivial()) continue;
    if (c.kind != CompKind::Cyclic && c.kind != CompKind::Zp) return false;
  }
  return true;
}

PrimaryDecomposition saut_component(std::int64_t q, ExponentSpec exponent) {
  if (!is_prime(q)) throw std::invalid_argument("saut_component: q is not prime");
  if (exponent.infinite) return unit_group_structure(q);
  const int m = exponent.m;
  if (m < 0) throw std::invalid_argument("saut_component: negative exponent");
  PrimaryDecomposition d;
  if (m == 0) return d;
  if (q == 2) {
    // (Z/2^m)^x: trivial, Z(2), Z(2) x Z(2^{m-2}).
    if (m == 2) d.add_finite(2, 1);
    if (m >= 3) {
      d.add_finite(2, 1);
      d.add_finite(2, m - 2);
    }
    return d;
  }
  // (Z/q^m)^x is cyclic of order q^{m-1}(q-1).
  d.add_finite(q, m - 1);
  for (const auto& [p, k] : factorize(q - 1)) d.add_finite(p, k);
  return d;
}

ExponentSpec component_exponent(std::int64_t p, const Component& c) {
  (void)p;
  switch (c.kind) {
    case CompKind::Qp:
      throw std::invalid_argument("scalar calculus does not apply to Qp components");
    case CompKind::Prufer: return ExponentSpec::inf();
    case CompKind::Zp: return ExponentSpec::inf();
    case CompKind::Cyclic: return ExponentSpec::finite(c.m);
    case CompKind::GeneralAbelian:
      return c.infinite_exponent ? ExponentSpec::inf() : ExponentSpec::finite(c.m);
  }
  throw std::logic_error("component_exponent: unreachable");
}

SautResult saut_decomposition(const LcaDescriptor& a) {
  SautResult out;
  for (const auto& [q, c] : a.comps) {
    if (c.trivial()) continue;
    if (c.kind == CompKind::Prufer) {
      std::ostringstream os;
      os << "p=" << q << ": Prufer component treated via its infinite exponent";
      out.notes.push_back(os.str());
    }
    PrimaryDecomposition d = saut_component(q, component_exponent(q, c));
    for (const auto& f : d.factors) {
      auto& acc = out.primary[f.p];
      if (f.omega)
        acc.add_omega(f.p);
      else
        acc.add_finite(f.p, f.exponent);
    }
  }
  return out;
}

PrimaryDecomposition SautResult::total() const {
  PrimaryDecomposition d;
  for (const auto& [p, part] : primary) {
    (void)p;
    d.append(part);
  }
  return d;
}

MasterGraph prime_graph_of_lca(const LcaDescriptor& a, std::int64_t bound) {
  for (std::int64_t p : a.support())
    if (p > bound) throw std::invalid_argument("prime_graph_of_lca: bound too small");
  MasterGraph master = build_master_graph(bound < 2 ? 2 : bound);
  MasterGraph out;
  out.index = master.index;
  for (const Edge& e : master.edges) {
    auto it = a.comps.find(e.q);
    if (it == a.comps.end() || it->second.trivial()) continue;
    if (!saut_component(e.q, component_exponent(e.q, it->second)).is_trivial())
      out.edges.push_back(e);
  }
  return out;
}

LcaDescriptor descriptor_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("descriptor: expected a JSON object");
  LcaDescriptor a;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::int64_t p = std::stoll(it.key());
    if (!is_prime(p)) throw std::invalid_argument("descriptor: key is not a prime: " + it.key());
    const nlohmann::json& v = it.value();
    const std::string kind = v.at("kind").get<std::string>();
    Component c;
    if (kind == "qp") {
      c.kind = CompKind::Qp;
    } else if (kind == "prufer") {
      c.kind = CompKind::Prufer;
    } else if (kind == "zp") {
      c.kind = CompKind::Zp;
    } else if (kind == "cyclic") {
      c.kind = CompKind::Cyclic;
      c.m = v.at("m").get<int>();
      if (c.m < 0) throw std::invalid_argument("descriptor: cyclic exponent must be >= 0");
    } else if (kind == "general") {
      c.kind = CompKind::GeneralAbelian;
      if (v.contains("infinite") && v.at("infinite").get<bool>()) {
        c.infinite_exponent = true;
      } else {
        c.m = v.at("m").get<int>();
        if (c.m < 0) throw std::invalid_argument("descriptor: exponent must be >= 0");
      }
    } else {
      throw std::invalid_argument("descriptor: unknown kind: " + kind);
    }
    a.comps[p] = c;
  }
  return a;
}

std::string descriptor_to_json(const LcaDescriptor& a) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [p, c] : a.comps) {
    nlohmann::json v;
    switch (c.kind) {
      case CompKind::Qp: v["kind"] = "qp"; break;
      case CompKind::Prufer: v["kind"] = "prufer"; break;
      case CompKind::Zp: v["kind"] = "zp"; break;
      case CompKind::Cyclic:
        v["kind"] = "cyclic";
        v["m"] = c.m;
        break;
      case CompKind::GeneralAbelian:
        v["kind"] = "general";
        if (c.infinite_exponent)
          v["infinite"] = true;
        else
          v["m"] = c.m;
        break;
    }
    j[std::to_string(p)] = v;
  }
  return j.dump();
}

}  // namespace grouplab
