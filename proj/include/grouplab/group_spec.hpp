#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouplab/finite_group.hpp"

namespace grouplab {

// Serializable recipe for constructing finite groups. Construction is
// deterministic: element ids are fixed by the recipe (abelian elements are
// residue vectors flattened row-major; semidirect elements are (a, t) pairs
// with id = a_id * h + t; quotients use least-member coset ids).
enum class SpecKind {
  Cyclic,            // Z(n)
  AbelianProduct,    // product of prime-power cyclic factors
  DirectProduct,     // product of sub-specs
  SemidirectScalar,  // abelian A with cyclic Z(h) acting by the scalar r
  QuaternionM,       // M_n = (Z(4) x| Z(2^n)) / Delta, order 2^{n+1}
  Iwasawa,           // Z(q) x| Z(c), c a p-power acting through an order-p scalar z
  CayleyTable,       // raw table
};

struct GroupSpec {
  SpecKind kind = SpecKind::Cyclic;
  std::int64_t n = 1;                        // Cyclic order / QuaternionM index
  std::vector<std::int64_t> factors;         // AbelianProduct / SemidirectScalar base
  std::vector<GroupSpec> parts;              // DirectProduct
  std::int64_t h = 1, r = 1;                 // SemidirectScalar
  std::int64_t p = 0, q = 0, c = 0, z = 0;   // Iwasawa
  std::vector<std::vector<int>> table;       // CayleyTable
  std::string name;                          // optional display name for CayleyTable

  static GroupSpec cyclic(std::int64_t n);
  static GroupSpec abelian(std::vector<std::int64_t> prime_powers);
  static GroupSpec direct(std::vector<GroupSpec> parts);
  static GroupSpec semidirect_scalar(std::vector<std::int64_t> base, std::int64_t h,
                                     std::int64_t r);
  static GroupSpec quaternion_m(std::int64_t n);
  static GroupSpec iwasawa(std::int64_t p, std::int64_t q, std::int64_t c, std::int64_t z);
  static GroupSpec cayley(std::vector<std::vector<int>> table, std::string name = "");
};

// Canonical one-line form, used to sort and deduplicate corpus entries.
std::string spec_string(const GroupSpec& s);

GroupSpec spec_from_json(const std::string& text);
std::string spec_to_json(const GroupSpec& s);

// Builds and verifies the group. Construction refuses orders > 4096.
// For QuaternionM the presentation relations are re-checked on the quotient
// model and a violation throws (none expected).
FiniteGroup construct(const GroupSpec& s);

// Exponent of an abelian product given by prime-power factors.
std::int64_t abelian_exponent(const std::vector<std::int64_t>& prime_powers);

// Designated generators (a, b) of a constructed QuaternionM(n): images of
// (1,0) and (0,1) in the quotient model.
struct QuaternionGenerators {
  elem_t a, b;
};
QuaternionGenerators quaternion_m_generators(std::int64_t n, const FiniteGroup& g);

// Dicyclic group of order 4m (m >= 2) as a raw table spec; Dic(2) is the
// quaternion group Q8, Dic(2^{k}) the generalized quaternion group of order
// 2^{k+2} in the classical sense (b inverts the maximal cyclic subgroup).
GroupSpec dicyclic_spec(int m);

constexpr int kConstructionOrderCap = 4096;

}  // namespace grouplab
