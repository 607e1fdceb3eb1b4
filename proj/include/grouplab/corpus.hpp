#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouplab/group_spec.hpp"

namespace grouplab {

struct CorpusEntry {
  std::string name;  // canonical spec string, the sort key for reports
  GroupSpec spec;
};

// Deterministic validation corpus:
//   - all abelian groups of order <= 64 (all isomorphism types),
//   - dihedral groups of order 2n <= 64,
//   - dicyclic groups of order 4m <= 64,
//   - QuaternionM(n) for n in {2, 3, 4},
//   - scalar semidirect products over Z(p^2), Z(p^3), Z(p) x Z(p^2) for
//     p in {2, 3, 5}, all unit scalars r != 1 and compatible cyclic orders h,
//   - Iwasawa factors for (p, q) in {(2,3),(2,5),(3,7),(5,11),(3,13)},
//     c in {p, p^2}, every unit z of order exactly p,
//   - direct products of selected nonabelian members with small abelian
//     groups.
// Entries are sorted by name and truncated to order <= max_order.
std::vector<CorpusEntry> build_corpus(int max_order);

// Order of the group a spec describes, without constructing it.
std::int64_t spec_order(const GroupSpec& s);

}  // namespace grouplab
