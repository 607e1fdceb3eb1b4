#include "grouplab/lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace grouplab {

namespace {

// Dimino-style extension of a subgroup by one element: the result is
// <s, x> as a union of right cosets of s.
Subgroup extend_subgroup(const FiniteGroup& g, const Subgroup& s, elem_t x) {
  if (s.contains(x)) return s;
  Bits bits = s.bits;
  std::vector<elem_t> members = s.members;
  std::vector<elem_t> gens = s.gens;
  gens.push_back(x);
  std::vector<elem_t> reps{0};
  std::vector<elem_t> frontier{x};
  while (!frontier.empty()) {
    const elem_t r = frontier.back();
    frontier.pop_back();
    if (bits.test(r)) continue;
    reps.push_back(r);
    for (elem_t m : s.members) {
      const elem_t y = g.op(m, r);
      if (!bits.test(y)) {
        bits.set(y);
        members.push_back(y);
      }
    }
    for (std::size_t ri = 0; ri < reps.size(); ++ri)
      for (elem_t t : gens) {
        const elem_t cand = g.op(reps[ri], t);
        if (!bits.test(cand)) frontier.push_back(cand);
      }
  }
  return make_subgroup(g, std::move(members), std::move(gens));
}

Subgroup subgroup_meet(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<elem_t> ms;
  for (elem_t m : a.members)
    if (b.contains(m)) ms.push_back(m);
  return make_subgroup(g, std::move(ms));
}

Subgroup subgroup_join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<elem_t> gens = a.members;
  gens.insert(gens.end(), b.members.begin(), b.members.end());
  return subgroup_generated(g, gens);
}

}  // namespace

int SubgroupLattice::find(const Bits& bits) const {
  auto it = index_.find(bits);
  return it == index_.end() ? -1 : it->second;
}

bool SubgroupLattice::includes(int i, int j) const {
  return (up_[i][j >> 6] >> (j & 63)) & 1;
}

void SubgroupLattice::build_inclusions() {
  const int n = size();
  const int words = (n + 63) / 64;
  up_.assign(n, std::vector<std::uint64_t>(words, 0));
  down_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (subs[i].order() <= subs[j].order() && subs[i].bits.subset_of(subs[j].bits)) {
        up_[i][j >> 6] |= std::uint64_t{1} << (j & 63);
        down_[j][i >> 6] |= std::uint64_t{1} << (i & 63);
      }
  index_.clear();
  for (int i = 0; i < n; ++i) index_.emplace(subs[i].bits, i);
}

void SubgroupLattice::ensure_tables() const {
  if (!join_tab_.empty()) return;
  const int n = size();
  const int words = (n + 63) / 64;
  join_tab_.assign(static_cast<std::size_t>(n) * n, 0);
  meet_tab_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      // Join: subgroups are sorted by order, so the first common overgroup
      // is the least one. Meet: the last common subgroup is the greatest.
      int join = -1, meet = -1;
      for (int w = 0; w < words && join < 0; ++w) {
        const std::uint64_t common = up_[i][w] & up_[j][w];
        if (common) join = w * 64 + std::countr_zero(common);
      }
      for (int w = words - 1; w >= 0 && meet < 0; --w) {
        const std::uint64_t common = down_[i][w] & down_[j][w];
        if (common) meet = w * 64 + (63 - std::countl_zero(common));
      }
      join_tab_[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint32_t>(join);
      join_tab_[static_cast<std::size_t>(j) * n + i] = static_cast<std::uint32_t>(join);
      meet_tab_[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint32_t>(meet);
      meet_tab_[static_cast<std::size_t>(j) * n + i] = static_cast<std::uint32_t>(meet);
    }
  }
}

int SubgroupLattice::meet_index(int i, int j) const {
  ensure_tables();
  return static_cast<int>(meet_tab_[static_cast<std::size_t>(i) * size() + j]);
}

int SubgroupLattice::join_index(int i, int j) const {
  ensure_tables();
  return static_cast<int>(join_tab_[static_cast<std::size_t>(i) * size() + j]);
}

std::vector<int> SubgroupLattice::contained_in(int i) const {
  std::vector<int> out;
  const int n = size();
  for (int j = 0; j < n; ++j)
    if ((down_[i][j >> 6] >> (j & 63)) & 1) out.push_back(j);
  return out;
}

SubgroupLattice enumerate_subgroups(const FiniteGroup& g, int cap) {
  if (g.order > cap) throw std::invalid_argument("enumerate_subgroups: order exceeds lattice cap");
  SubgroupLattice lat;
  lat.group = g;

  std::unordered_map<Bits, int, BitsHash> seen;
  std::vector<Subgroup> list;
  auto add = [&](Subgroup s) -> int {
    auto it = seen.find(s.bits);
    if (it != seen.end()) return it->second;
    const int id = static_cast<int>(list.size());
    if (id >= kLatticeSizeGuard)
      throw std::runtime_error("enumerate_subgroups: lattice size guard exceeded");
    seen.emplace(s.bits, id);
    list.push_back(std::move(s));
    return id;
  };

  add(trivial_subgroup(g));
  std::vector<std::pair<elem_t, int>> cyclic;  // (generator, subgroup id)
  {
    std::unordered_map<Bits, elem_t, BitsHash> cyclic_seen;
    for (int x = 1; x < g.order; ++x) {
      Subgroup c = subgroup_generated(g, {static_cast<elem_t>(x)});
      if (!cyclic_seen.count(c.bits)) {
        cyclic_seen.emplace(c.bits, static_cast<elem_t>(x));
        cyclic.emplace_back(static_cast<elem_t>(x), add(std::move(c)));
      }
    }
  }

  for (std::size_t i = 0; i < list.size(); ++i) {
    for (const auto& [gen, cid] : cyclic) {
      (void)cid;
      if (list[i].contains(gen)) continue;
      add(extend_subgroup(g, list[i], gen));
    }
  }

  std::sort(list.begin(), list.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  lat.subs = std::move(list);
  lat.build_inclusions();
  return lat;
}

SetProduct set_product(const FiniteGroup& g, const Subgroup& x, const Subgroup& y) {
  Bits bits(g.order);
  for (elem_t a : x.members)
    for (elem_t b : y.members) bits.set(g.op(a, b));
  SetProduct r;
  for (int i = 0; i < g.order; ++i)
    if (bits.test(i)) r.elements.push_back(static_cast<elem_t>(i));
  r.is_subgroup = true;
  for (elem_t a : r.elements) {
    for (elem_t b : r.elements)
      if (!bits.test(g.op(a, b))) {
        r.is_subgroup = false;
        break;
      }
    if (!r.is_subgroup) break;
  }
  return r;
}

QhResult is_quasihamiltonian(const SubgroupLattice& lat) {
  const FiniteGroup& g = lat.group;
  const int n = lat.size();
  Bits xy(g.order), yx(g.order);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Subgroup& x = lat.subs[i];
      const Subgroup& y = lat.subs[j];
      std::fill(xy.w.begin(), xy.w.end(), 0);
      std::fill(yx.w.begin(), yx.w.end(), 0);
      for (elem_t a : x.members)
        for (elem_t b : y.members) {
          xy.set(g.op(a, b));
          yx.set(g.op(b, a));
        }
      if (!(xy == yx)) return {false, PermutabilityWitness{x, y}};
    }
  }
  return {true, std::nullopt};
}

QhResult is_quasihamiltonian(const FiniteGroup& g, int cap) {
  return is_quasihamiltonian(enumerate_subgroups(g, cap));
}

ModResult is_modular(const SubgroupLattice& lat) {
  lat.ensure_tables();
  const int n = lat.size();
  std::vector<std::uint32_t> meet_with_z(n);
  for (int z = 0; z < n; ++z) {
    if (lat.subs[z].order() == lat.group.order) continue;  // Z = G is vacuous
    for (int y = 0; y < n; ++y) meet_with_z[y] = static_cast<std::uint32_t>(lat.meet_index(y, z));
    for (int x : lat.contained_in(z)) {
      if (x == z || lat.subs[x].order() == 1) continue;  // X = Z and X = 1 are vacuous
      for (int y = 0; y < n; ++y) {
        const int lhs = lat.join_index(x, static_cast<int>(meet_with_z[y]));
        const int rhs = lat.meet_index(lat.join_index(x, y), z);
        if (lhs != rhs)
          return {false, ModularityWitness{lat.subs[x], lat.subs[y], lat.subs[z]}};
      }
    }
  }
  return {true, std::nullopt};
}

ModResult is_modular(const FiniteGroup& g, int cap) {
  return is_modular(enumerate_subgroups(g, cap));
}

bool verify_modularity_witness(const FiniteGroup& g, const ModularityWitness& w) {
  // Recompute both sides from scratch.
  if (!w.x.bits.subset_of(w.z.bits)) return false;
  const Subgroup lhs = subgroup_join(g, w.x, subgroup_meet(g, w.y, w.z));
  const Subgroup rhs = subgroup_meet(g, subgroup_join(g, w.x, w.y), w.z);
  return !(lhs == rhs);
}

Pentagon derive_pentagon(const FiniteGroup& g, const ModularityWitness& w) {
  Pentagon p;
  p.bottom = subgroup_meet(g, w.y, w.z);
  p.lower = subgroup_join(g, w.x, p.bottom);
  p.upper = subgroup_meet(g, subgroup_join(g, w.x, w.y), w.z);
  p.side = w.y;
  p.top = subgroup_join(g, w.x, w.y);
  return p;
}

bool verify_pentagon(const FiniteGroup& g, const Pentagon& p) {
  if (p.lower == p.upper) return false;
  if (!p.lower.bits.subset_of(p.upper.bits)) return false;
  if (!(subgroup_join(g, p.lower, p.side) == p.top)) return false;
  if (!(subgroup_join(g, p.upper, p.side) == p.top)) return false;
  if (!(subgroup_meet(g, p.lower, p.side) == p.bottom)) return false;
  if (!(subgroup_meet(g, p.upper, p.side) == p.bottom)) return false;
  // All five vertices distinct.
  const Subgroup* v[5] = {&p.bottom, &p.lower, &p.upper, &p.side, &p.top};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (*v[i] == *v[j]) return false;
  return true;
}

bool verify_permutability_witness(const FiniteGroup& g, const PermutabilityWitness& w) {
  Bits xy(g.order), yx(g.order);
  for (elem_t a : w.x.members)
    for (elem_t b : w.y.members) {
      xy.set(g.op(a, b));
      yx.set(g.op(b, a));
    }
  return !(xy == yx);
}

std::string lattice_dot(const SubgroupLattice& lat) {
  const int n = lat.size();
  std::ostringstream os;
  os << "graph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < n; ++i)
    os << "  s" << i << " [label=\"#" << i << " |" << lat.subs[i].order() << "|\"];\n";
  // Cover relation: i below j with nothing strictly between, i.e. the
  // interval [i, j] in the inclusion order has exactly two elements.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !lat.includes(i, j)) continue;
      int between = 0;
      for (int k = 0; k < n && between <= 2; ++k)
        if (lat.includes(i, k) && lat.includes(k, j)) ++between;
      if (between == 2) os << "  s" << i << " -- s" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string lattice_json(const SubgroupLattice& lat) {
  std::ostringstream os;
  os << "{\"order\":" << lat.group.order << ",\"subgroups\":[";
  for (int i = 0; i < lat.size(); ++i) {
    if (i) os << ",";
    os << "{\"id\":" << i << ",\"members\":[";
    for (std::size_t k = 0; k < lat.subs[i].members.size(); ++k)
      os << (k ? "," : "") << lat.subs[i].members[k];
    os << "]}";
  }
  os << "],\"inclusions\":[";
  bool first = true;
  for (int i = 0; i < lat.size(); ++i)
    for (int j = 0; j < lat.size(); ++j)
      if (i != j && lat.includes(i, j)) {
        if (!first) os << ",";
        first = false;
        os << "[" << i << "," << j << "]";
      }
  os << "]}";
  return os.str();
}

}  // namespace grouplab
