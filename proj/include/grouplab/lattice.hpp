#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "grouplab/finite_group.hpp"

namespace grouplab {

constexpr int kDefaultLatticeOrderCap = 512;
constexpr int kLatticeSizeGuard = 50000;

// Full subgroup lattice. Subgroups are deduplicated and sorted by
// (order, member set), so index 0 is the trivial subgroup and the last index
// is the whole group. Join/meet tables are built on demand.
struct SubgroupLattice {
  FiniteGroup group;  // owned copy
  std::vector<Subgroup> subs;

  int size() const { return static_cast<int>(subs.size()); }
  int find(const Bits& bits) const;  // -1 when absent
  int find(const Subgroup& s) const { return find(s.bits); }
  bool includes(int i, int j) const;  // subs[i] subset of subs[j]

  int meet_index(int i, int j) const;
  int join_index(int i, int j) const;
  const Subgroup& meet(int i, int j) const { return subs[meet_index(i, j)]; }
  const Subgroup& join(int i, int j) const { return subs[join_index(i, j)]; }

  void ensure_tables() const;

  // Indices of subgroups whose member set is contained in subs[i].
  std::vector<int> contained_in(int i) const;

 private:
  friend SubgroupLattice enumerate_subgroups(const FiniteGroup&, int);
  void build_inclusions();
  std::unordered_map<Bits, int, BitsHash> index_;
  std::vector<std::vector<std::uint64_t>> up_, down_;  // inclusion masks over indices
  mutable std::vector<std::uint32_t> join_tab_, meet_tab_;
};

// Every subgroup exactly once, via bottom-up cyclic-extension closure.
// Throws when |g| exceeds the cap.
SubgroupLattice enumerate_subgroups(const FiniteGroup& g, int cap = kDefaultLatticeOrderCap);

struct SetProduct {
  std::vector<elem_t> elements;
  bool is_subgroup = false;
};

// XY = {xy : x in X, y in Y} and whether it is closed (equivalently XY = YX).
SetProduct set_product(const FiniteGroup& g, const Subgroup& x, const Subgroup& y);

struct PermutabilityWitness {
  Subgroup x, y;
};

struct QhResult {
  bool quasihamiltonian = false;
  std::optional<PermutabilityWitness> witness;
};

// True iff every pair of subgroups permutes; otherwise the first witness pair
// in canonical order.
QhResult is_quasihamiltonian(const SubgroupLattice& lat);
QhResult is_quasihamiltonian(const FiniteGroup& g, int cap = kDefaultLatticeOrderCap);

struct ModularityWitness {
  Subgroup x, y, z;  // x subset of z and x v (y ^ z) != (x v y) ^ z
};

struct ModResult {
  bool modular = false;
  std::optional<ModularityWitness> witness;
};

// The five subgroups {bottom, a, b, side, top} of the pentagon sublattice
// derived from a law violation: bottom = y ^ z, a = x v (y ^ z),
// b = (x v y) ^ z, side = y, top = x v y, with a < b, a v side = b v side
// = top and a ^ side = b ^ side = bottom.
struct Pentagon {
  Subgroup bottom, lower, upper, side, top;
};

Pentagon derive_pentagon(const FiniteGroup& g, const ModularityWitness& w);

// Checks the five N5 relations directly against the group.
bool verify_pentagon(const FiniteGroup& g, const Pentagon& p);

// Exhaustive modular-law check over all triples with X subset of Z.
ModResult is_modular(const SubgroupLattice& lat);
ModResult is_modular(const FiniteGroup& g, int cap = kDefaultLatticeOrderCap);

// Replays a witness directly against the group (independent of the tables).
bool verify_modularity_witness(const FiniteGroup& g, const ModularityWitness& w);
bool verify_permutability_witness(const FiniteGroup& g, const PermutabilityWitness& w);

// Hasse diagram (cover relation) and JSON export (members + inclusion pairs).
std::string lattice_dot(const SubgroupLattice& lat);
std::string lattice_json(const SubgroupLattice& lat);

}  // namespace grouplab
