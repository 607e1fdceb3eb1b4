#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "grouplab/primary.hpp"
#include "grouplab/primegraph.hpp"

namespace grouplab {

// Per-prime component of a periodic abelian descriptor. Cyclic(m) stands for
// Z(p^m); Cyclic(0) is the trivial component. GeneralAbelian carries only its
// exponent (p^m, or infinite), since the scalar-automorphism group depends on
// the exponent alone.
enum class CompKind { Qp, Prufer, Zp, Cyclic, GeneralAbelian };

struct Component {
  CompKind kind = CompKind::Cyclic;
  int m = 0;                       // Cyclic / finite-exponent GeneralAbelian
  bool infinite_exponent = false;  // GeneralAbelian only

  bool trivial() const {
    return (kind == CompKind::Cyclic && m == 0) ||
           (kind == CompKind::GeneralAbelian && !infinite_exponent && m == 0);
  }
};

// Finite map prime -> component; all unspecified primes carry the trivial
// component (cofinite triviality is implicit).
struct LcaDescriptor {
  std::map<std::int64_t, Component> comps;

  bool trivial() const;
  // Primes with a nontrivial component.
  std::vector<std::int64_t> support() const;
};

struct PiPartition {
  std::set<std::int64_t> piA, piB, piC, piD;
};

struct ClassifyResult {
  bool accepted = false;
  PiPartition partition;
  std::int64_t offending_prime = 0;
  std::string reason;
};

struct SplitResult {
  LcaDescriptor divisible;   // piA and piB components
  LcaDescriptor procyclic;   // piC and piD components
};

struct ExponentSpec {
  bool infinite = false;
  int m = 0;  // exponent q^m when finite

  static ExponentSpec finite(int m) { return {false, m}; }
  static ExponentSpec inf() { return {true, 0}; }
};

struct SautResult {
  // Upper prime -> primary component of SAut(A).
  std::map<std::int64_t, PrimaryDecomposition> primary;
  std::vector<std::string> notes;  // e.g. Prufer components handled via their infinite exponent

  PrimaryDecomposition total() const;
};

// Partition of the support into piA..piD when every component is one of
// Qp / Prufer / Zp / Cyclic; rejection (with witness prime) otherwise.
ClassifyResult classify_inductively_monothetic(const LcaDescriptor& a);

// D carries piA+piB, P carries piC+piD. Throws if classification rejects.
SplitResult split_divisible_procyclic(const LcaDescriptor& a);

// True iff every component is Cyclic or Zp.
bool is_pi_procyclic(const LcaDescriptor& a);

// Primary decomposition of the unit group of Z(q^m) (finite case, the group
// of units mod q^m) or of Z_q (infinite case). m = 0 yields the trivial
// decomposition. The q = 2 cases use the non-cyclic structure.
PrimaryDecomposition saut_component(std::int64_t q, ExponentSpec exponent);

// Per upper prime, the primary component of SAut(A) assembled from
// saut_component over the support of a. Throws on Qp components (scalar
// calculus applies to the periodic base only, never to Q_p-type quotients).
SautResult saut_decomposition(const LcaDescriptor& a);

// Subgraph of the master graph keeping only edges whose lower component has
// nontrivial SAut. Requires bound >= every support prime.
MasterGraph prime_graph_of_lca(const LcaDescriptor& a, std::int64_t bound);

// Exponent of a single component as seen by the scalar calculus.
// Throws on Qp. Prufer maps to the infinite exponent.
ExponentSpec component_exponent(std::int64_t p, const Component& c);

// JSON round trip for the descriptor file format:
//   {"2": {"kind": "cyclic", "m": 3}, "3": {"kind": "zp"}, ...}
LcaDescriptor descriptor_from_json(const std::string& text);
std::string descriptor_to_json(const LcaDescriptor& a);

}  // namespace grouplab
