#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grouplab {

// One procyclic factor of a primary decomposition: either the finite cyclic
// group Z(p^exponent) or the procyclic group Z_p of infinite exponent
// (omega = true, exponent ignored).
struct PrimaryFactor {
  std::int64_t p = 0;
  int exponent = 0;  // >= 1 for finite factors
  bool omega = false;

  bool operator==(const PrimaryFactor&) const = default;
};

// Formal product of procyclic factors, kept in canonical order so that value
// equality is structural equality: Z_p factors first (p ascending), then
// finite factors by (p ascending, exponent descending).
struct PrimaryDecomposition {
  std::vector<PrimaryFactor> factors;

  void add_finite(std::int64_t p, int exponent);  // exponent 0 factors are dropped
  void add_omega(std::int64_t p);
  void append(const PrimaryDecomposition& other);
  void canonicalize();

  bool is_trivial() const { return factors.empty(); }
  bool has_omega() const;
  // Product of the finite factor orders; throws if an omega factor is present.
  std::int64_t finite_order() const;

  // Canonical rendering, e.g. "Z_13 x Z(4) x Z(3)"; "1" when trivial.
  std::string str() const;

  bool operator==(const PrimaryDecomposition&) const = default;
};

}  // namespace grouplab
