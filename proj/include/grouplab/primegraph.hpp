#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grouplab/primary.hpp"

namespace grouplab {

// Ordered list of all primes up to a bound; index n (1-based) corresponds to
// the n-th prime, so the list is the order-preserving enumeration of primes.
struct PrimeIndex {
  std::int64_t bound = 0;
  std::vector<std::int64_t> primes;

  static PrimeIndex up_to(std::int64_t bound);
  bool contains(std::int64_t p) const;
};

enum class EdgeKind { Vertical, Sloping };

// Edge of the bipartite prime graph: upper vertex p, lower vertex q.
// Vertical: p == q, k = 0, s = 1. Sloping: p | (q-1) and q-1 = p^k * s with
// gcd(p, s) = 1, k >= 1.
struct Edge {
  std::int64_t p = 0;
  std::int64_t q = 0;
  EdgeKind kind = EdgeKind::Vertical;
  int k = 0;
  std::int64_t s = 1;

  bool operator==(const Edge&) const = default;
};

// Bipartite graph on two copies of the primes <= bound with exactly one
// vertical edge per prime and a sloping edge (p, q) whenever p | (q-1).
// Edges are kept sorted by (q ascending, p ascending) for reproducibility.
struct MasterGraph {
  PrimeIndex index;
  std::vector<Edge> edges;

  std::int64_t bound() const { return index.bound; }
};

// True iff q = p or p | (q-1). Throws on non-prime input.
bool prime_relation(std::int64_t p, std::int64_t q);

// Requires bound >= 2.
MasterGraph build_master_graph(std::int64_t bound);

// All edges with upper vertex p (vertical plus sloping p -> q within bound).
std::vector<Edge> cone(const MasterGraph& g, std::int64_t p);

// All edges with lower vertex q; complete whenever bound >= q.
std::vector<Edge> funnel(const MasterGraph& g, std::int64_t q);

// For a sloping edge: k = v_p(q-1) >= 1 and s = (q-1)/p^k with gcd(p,s) = 1.
// Throws if p = q or p does not divide q-1.
std::pair<int, std::int64_t> edge_data(std::int64_t p, std::int64_t q);

// Primary decomposition of the unit group of the q-adic integers.
// Odd q: Z_q x prod over sloping funnel edges of Z(p_e^{k(e)}).
// q = 2: Z(2) x Z_2 -- the funnel of 2 has no sloping edges, yet (Z/2^m)^x
// is non-cyclic for m >= 3, so a bare Z_2 would be wrong; the brute-force
// decomposition is the arbiter.
PrimaryDecomposition unit_group_structure(std::int64_t q);

// p-primary component of the unit group of the profinite integers, truncated
// to lower primes <= bound: one Z_p plus Z(p^{k(e)}) per sloping cone edge;
// for p = 2 an extra Z(2) from the corrected q = 2 funnel.
PrimaryDecomposition sylow_of_ztilde_units(std::int64_t p, std::int64_t bound);

// Decomposition of (Z/q^m)^x computed by enumerating element orders.
// Requires q^m <= 1e7.
PrimaryDecomposition unit_group_bruteforce(std::int64_t q, int m);

// DOT rendering: upper vertices on one rank, lower on the other; vertical
// edges thin, sloping edges thick.
std::string master_graph_dot(const MasterGraph& g);

// JSON rendering: {"bound": B, "edges": [{"p","q","kind","k","s"}...]}.
std::string master_graph_json(const MasterGraph& g);

}  // namespace grouplab
