#include "grouplab/primary.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "grouplab/primes.hpp"

namespace grouplab {

void PrimaryDecomposition::add_finite(std::int64_t p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("PrimaryDecomposition: negative exponent");
  if (exponent == 0) return;
  factors.push_back({p, exponent, false});
  canonicalize();
}

void PrimaryDecomposition::add_omega(std::int64_t p) {
  factors.push_back({p, 0, true});
  canonicalize();
}

void PrimaryDecomposition::append(const PrimaryDecomposition& other) {
  factors.insert(factors.end(), other.factors.begin(), other.factors.end());
  canonicalize();
}

void PrimaryDecomposition::canonicalize() {
  std::sort(factors.begin(), factors.end(), [](const PrimaryFactor& a, const PrimaryFactor& b) {
    if (a.omega != b.omega) return a.omega;
    if (a.p != b.p) return a.p < b.p;
    return a.exponent > b.exponent;
  });
}

bool PrimaryDecomposition::has_omega() const {
  for (const auto& f : factors)
    if (f.omega) return true;
  return false;
}

std::int64_t PrimaryDecomposition::finite_order() const {
  std::int64_t n = 1;
  for (const auto& f : factors) {
    if (f.omega) throw std::domain_error("finite_order: decomposition has an infinite factor");
    n *= ipow(f.p, f.exponent);
  }
  return n;
}

std::string PrimaryDecomposition::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << " x ";
    first = false;
    if (f.omega)
      os << "Z_" << f.p;
    else
      os << "Z(" << ipow(f.p, f.exponent) << ")";
  }
  return os.str();
}

}  // namespace grouplab
