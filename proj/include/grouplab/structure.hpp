#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grouplab/finite_group.hpp"
#include "grouplab/lattice.hpp"

namespace grouplab {

// Base subgroup witness: A abelian, every subgroup of A normal in G, G/A
// cyclic. nontrivial records |G : C_G(A)| > 2.
struct BaseWitness {
  Subgroup a;
  elem_t quotient_cyclic_generator = 0;  // coset id in G/A
  bool nontrivial = false;
};

// One verified condition inside a report.
struct CheckItem {
  std::string name;
  bool pass = true;
  std::string detail;  // replayable witness data, empty when passing
};

enum class Verdict { Pass, Fail, HypothesisNotMet };

struct GroupReport {
  Verdict verdict = Verdict::Pass;
  std::vector<CheckItem> checks;
  std::string hypothesis_note;

  void add(const std::string& name, bool pass, const std::string& detail = "");
  bool all_pass() const { return verdict != Verdict::Fail; }
};

// --- base detection and scaling ---------------------------------------

// Base of maximal order (ties: smallest member set); nullopt iff no subgroup
// qualifies, i.e. the group is not near abelian.
std::optional<BaseWitness> find_base(const SubgroupLattice& lat);

// Cyclic H of minimal order with A * H = G setwise.
std::optional<Subgroup> find_scaling_subgroup(const SubgroupLattice& lat, const BaseWitness& w);

// Builds the external semidirect product A x| H from the conjugation action
// and checks the multiplication map a*h -> ah: surjective, kernel
// {(h^-1, h) : h in A n H} of order |A n H|, both factors mapped faithfully.
GroupReport sandwich_check(const FiniteGroup& g, const Subgroup& a, const Subgroup& h);

// --- Sylow machinery ----------------------------------------------------

// The three equivalent normal-Sylow conditions, evaluated independently for
// sigma = primes of |N|: (1) N is a normal sigma-Sylow subgroup, (2) N equals
// the set of sigma-elements, (3) N is normal and G/N has no sigma-element.
struct SzcStatus {
  bool normal_sylow = false;
  bool equals_sigma_elements = false;
  bool quotient_sigma_free = false;
  bool equivalent() const {
    return normal_sylow == equals_sigma_elements && equals_sigma_elements == quotient_sigma_free;
  }
  bool holds() const { return normal_sylow && equals_sigma_elements && quotient_sigma_free; }
};

SzcStatus szc_status(const FiniteGroup& g, const SubgroupLattice& lat, const Subgroup& n);

struct ComplementResult {
  Subgroup complement;
  int complement_count = 0;
  bool all_conjugate = false;
};

// Requires the Schur-Zassenhaus condition on N (throws naming the violated
// clause otherwise). Finds a complement and exhaustively verifies that every
// K with K n N = 1 and |K| = |G/N| is conjugate to it.
ComplementResult sz_complement(const FiniteGroup& g, const SubgroupLattice& lat,
                               const Subgroup& n);

// Primes p such that every p-element commutes with every p'-element.
std::set<std::int64_t> nu_set(const FiniteGroup& g);

// Internal-direct-product verification for the nu decomposition.
GroupReport nu_decomposition_check(const FiniteGroup& g);

// Maximal sigma-subgroups (from the lattice), sorted canonically.
std::vector<Subgroup> maximal_sigma_subgroups(const SubgroupLattice& lat,
                                              const std::set<std::int64_t>& sigma);

// Sigma-Sylow structure relative to a base with A = C_G(A) and a scaling H:
// S n A = A_sigma, |SA/A| = |(G/A)_sigma|, conjugacy of all maximal
// sigma-subgroups, and the factorization S = A_sigma Z(G)_sigma H_sigma.
GroupReport sigma_sylow(const FiniteGroup& g, const SubgroupLattice& lat, const BaseWitness& w,
                        const std::set<std::int64_t>& sigma);

// --- prime graph of a group ----------------------------------------------

struct GroupGraphEdge {
  std::int64_t p = 0, q = 0;
  bool vertical = false;
  elem_t witness_h = 0, witness_a = 0;  // [witness_h, witness_a] != 1
};

struct GroupPrimeGraph {
  std::set<std::int64_t> lower;  // q with A_q != 1
  std::set<std::int64_t> upper;  // p with (G/C_G(A))_p != 1
  std::vector<GroupGraphEdge> edges;  // (p, q) with [H_p, A_q] != 1, sorted (q, p)
};

GroupPrimeGraph prime_graph_of_group(const FiniteGroup& g, const BaseWitness& w,
                                     const Subgroup& h);

// Edge conditions: sloping edges need p odd, p | (q-1), a -> [x,a] bijective
// on A_q for every p-element x outside C_G(A_q), and A_q n Z(G) = 1; vertical
// edges need the scalar form [x,a] = a^{q^m s} with the central exponent
// bound. Hypothesis-not-met for A-trivial groups.
GroupReport apq_check(const FiniteGroup& g, const BaseWitness& w, const GroupPrimeGraph& graph);

// C_G(A) = A Z(G) and C_G(A) n H inside Z(G). Hypothesis-not-met when the
// group is A-trivial.
GroupReport cga_az_check(const FiniteGroup& g, const SubgroupLattice& lat, const BaseWitness& w);

// --- classification -------------------------------------------------------

enum class TqhKind { Abelian, Scalar, Quaternionic, NotTqh };

struct TqhVerdict {
  TqhKind kind = TqhKind::NotTqh;
  int s = 0;                  // Scalar: a^b = a^{1+p^s}
  int n = 0;                  // Quaternionic: M_n factor
  std::optional<Subgroup> a2; // Quaternionic: the exponent-2 direct factor
};

// Decides which clause applies to a p-group: abelian; scalar (base A and
// cyclic H = <b> with a^b = a^{1+p^s}, s >= 1, s >= 2 when p = 2);
// quaternionic (internal A2 x M_n with A2 elementary abelian); or none.
TqhVerdict classify_tqh_p_group(const FiniteGroup& g, const SubgroupLattice& lat,
                                std::int64_t p);

struct IwasawaRecognition {
  std::int64_t p = 0, q = 0;
  Subgroup base;     // A = G', elementary abelian q-group
  Subgroup scaling;  // cyclic p-group H with G = A x| H, action of order p
};

// Tests: G' abelian of prime exponent q; a cyclic p-group scaling H acting
// with image of order p; then verifies G = A x| H and Z(G) = {h^p : h in H}.
std::optional<IwasawaRecognition> recognize_iwasawa_pq(const FiniteGroup& g,
                                                       const SubgroupLattice& lat);

// Block partition J of the primes of |G| into singletons (modular p-groups)
// and pairs {p, q} (Iwasawa factors), with the internal direct product
// verified. Requires is_modular(g); pass/fail report plus the partition.
struct ModularMainResult {
  GroupReport report;
  std::vector<std::set<std::int64_t>> blocks;
};

ModularMainResult modular_main_check(const FiniteGroup& g, const SubgroupLattice& lat,
                                     bool assume_modular = false);

// Every 2-generated subgroup cyclic (equivalently the group is cyclic);
// computed both ways and cross-checked.
bool is_inductively_monothetic_finite(const FiniteGroup& g);

// --- scalar morphism (abelian groups) --------------------------------------

struct ScalarLemmaResult {
  bool equal = false;
  int fixing_automorphisms = 0;  // automorphisms fixing every cyclic subgroup
  int scalar_maps = 0;           // units modulo the exponent acting as maps
};

// For an abelian group: the set of automorphisms fixing every cyclic
// subgroup setwise equals the set of scalar maps x -> r x, gcd(r, exp) = 1.
// Exact set equality of maps.
ScalarLemmaResult scalar_lemma_check(const FiniteGroup& g,
                                     const std::vector<std::int64_t>& abelian_factors);

}  // namespace grouplab
