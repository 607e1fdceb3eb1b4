#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace grouplab {

using elem_t = std::uint16_t;

// Small fixed-capacity bitset over element ids.
struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  int count() const;
  bool operator==(const Bits&) const = default;
  bool subset_of(const Bits& other) const;
  Bits and_with(const Bits& other) const;
  Bits or_with(const Bits& other) const;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t x : b.w) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Finite group given by a total multiplication table over ids 0..order-1,
// with identity 0. Construction verifies the table (associativity, identity,
// inverses); values are immutable afterwards and all queries are read-only.
struct FiniteGroup {
  int order = 1;
  std::vector<elem_t> mul;  // order x order, row-major
  std::vector<elem_t> inv;
  std::vector<std::string> labels;  // optional, empty or size == order

  elem_t op(elem_t a, elem_t b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
  elem_t conj(elem_t g, elem_t x) const { return op(op(g, x), inv[g]); }
  elem_t commutator(elem_t x, elem_t y) const {
    return op(op(op(x, y), inv[x]), inv[y]);  // [x,y] = x y x^-1 y^-1
  }

  // Throws std::invalid_argument when the table is not a group table.
  // Full O(n^3) associativity check up to order 512, generator-based
  // (Light's test) beyond.
  void verify() const;

  bool is_abelian() const;
  std::vector<std::int64_t> prime_support() const;  // primes dividing the order
};

struct Subgroup {
  std::vector<elem_t> members;  // sorted ascending
  std::vector<elem_t> gens;
  Bits bits;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(elem_t x) const { return bits.test(x); }
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

Subgroup make_subgroup(const FiniteGroup& g, std::vector<elem_t> members,
                       std::vector<elem_t> gens = {});

int element_order(const FiniteGroup& g, elem_t x);

// Least subgroup containing gens, by closure iteration.
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<elem_t>& gens);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);
Subgroup centralizer_of_set(const FiniteGroup& g, const std::vector<elem_t>& xs);
Subgroup commutator_subgroup(const FiniteGroup& g);

bool is_normal(const FiniteGroup& g, const Subgroup& s);
bool subgroup_is_abelian(const FiniteGroup& g, const Subgroup& s);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, elem_t x);

struct SigmaElements {
  std::vector<elem_t> elements;
  bool is_subgroup = false;
};

// All x whose order has prime divisors within sigma, and whether that set is
// closed under the group operation.
SigmaElements sigma_elements(const FiniteGroup& g, const std::set<std::int64_t>& sigma);

// sigma = {p}.
Subgroup primary_component(const FiniteGroup& g, const Subgroup& abelian, std::int64_t p);

struct Quotient {
  FiniteGroup group;
  std::vector<elem_t> coset_of;  // element id -> coset id
};

// Coset group with canonical coset ids (cosets sorted by least member, so the
// identity coset is id 0). Throws when n is not normal.
Quotient quotient_group(const FiniteGroup& g, const Subgroup& n);

struct SubgroupEmbedding {
  FiniteGroup group;
  std::vector<elem_t> to_parent;  // new id -> parent id
};

// The subgroup as a group in its own right (ids in member order).
SubgroupEmbedding subgroup_as_group(const FiniteGroup& g, const Subgroup& s);

// Direct product table of two groups (a-major id layout: id = ia * |b| + ib).
FiniteGroup direct_product_table(const FiniteGroup& a, const FiniteGroup& b);

// Cayley-table export {order, mul:[[...]], labels?}.
std::string cayley_table_json(const FiniteGroup& g);

}  // namespace grouplab
