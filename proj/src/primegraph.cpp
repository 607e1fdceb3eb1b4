#include "grouplab/primegraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "grouplab/primes.hpp"

namespace grouplab {

PrimeIndex PrimeIndex::up_to(std::int64_t bound) {
  PrimeIndex idx;
  idx.bound = bound;
  idx.primes = sieve_primes(bound);
  return idx;
}

bool PrimeIndex::contains(std::int64_t p) const {
  return std::binary_search(primes.begin(), primes.end(), p);
}

bool prime_relation(std::int64_t p, std::int64_t q) {
  if (!is_prime(p)) throw std::invalid_argument("prime_relation: p is not prime");
  if (!is_prime(q)) throw std::invalid_argument("prime_relation: q is not prime");
  return q == p || (q - 1) % p == 0;
}

MasterGraph build_master_graph(std::int64_t bound) {
  if (bound < 2) throw std::invalid_argument("build_master_graph: bound must be >= 2");
  MasterGraph g;
  g.index = PrimeIndex::up_to(bound);
  // (q ascending, then p ascending) everywhere.
  for (std::int64_t q : g.index.primes) {
    for (std::int64_t p : g.index.primes) {
      if (p > q) break;
      if (p == q) {
        g.edges.push_back({p, q, EdgeKind::Vertical, 0, 1});
      } else if ((q - 1) % p == 0) {
        auto [k, s] = edge_data(p, q);
        g.edges.push_back({p, q, EdgeKind::Sloping, k, s});
      }
    }
  }
  return g;
}

std::vector<Edge> cone(const MasterGraph& g, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("cone: p is not prime");
  if (p > g.bound()) throw std::invalid_argument("cone: p exceeds graph bound");
  std::vector<Edge> out;
  for (const Edge& e : g.edges)
    if (e.p == p) out.push_back(e);
  return out;
}

std::vector<Edge> funnel(const MasterGraph& g, std::int64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("funnel: q is not prime");
  if (q > g.bound()) throw std::invalid_argument("funnel: q exceeds graph bound");
  std::vector<Edge> out;
  for (const Edge& e : g.edges)
    if (e.q == q) out.push_back(e);
  return out;
}

std::pair<int, std::int64_t> edge_data(std::int64_t p, std::int64_t q) {
  if (!is_prime(p) || !is_prime(q)) throw std::invalid_argument("edge_data: inputs must be prime");
  if (p == q) throw std::invalid_argument("edge_data: p = q is a vertical edge");
  if ((q - 1) % p != 0) throw std::invalid_argument("edge_data: p does not divide q-1");
  const int k = p_adic_valuation(q - 1, p);
  const std::int64_t s = (q - 1) / ipow(p, k);
  return {k, s};
}

PrimaryDecomposition unit_group_structure(std::int64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("unit_group_structure: q is not prime");
  PrimaryDecomposition d;
  d.add_omega(q);
  if (q == 2) {
    d.add_finite(2, 1);
    return d;
  }
  for (const auto& [p, k] : factorize(q - 1)) d.add_finite(p, k);
  return d;
}

PrimaryDecomposition sylow_of_ztilde_units(std::int64_t p, std::int64_t bound) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_of_ztilde_units: p is not prime");
  if (p > bound) throw std::invalid_argument("sylow_of_ztilde_units: p exceeds bound");
  PrimaryDecomposition d;
  d.add_omega(p);
  if (p == 2) d.add_finite(2, 1);
  for (std::int64_t q : sieve_primes(bound)) {
    if (q == p || (q - 1) % p != 0) continue;
    d.add_finite(p, p_adic_valuation(q - 1, p));
  }
  return d;
}

PrimaryDecomposition unit_group_bruteforce(std::int64_t q, int m) {
  if (!is_prime(q)) throw std::invalid_argument("unit_group_bruteforce: q is not prime");
  if (m < 1) throw std::invalid_argument("unit_group_bruteforce: m must be >= 1");
  const std::int64_t modulus = ipow(q, m);
  if (modulus > 10'000'000) throw std::invalid_argument("unit_group_bruteforce: modulus too large");

  // Group exponent: lambda(q^m).
  std::int64_t lambda;
  if (q == 2)
    lambda = m <= 1 ? 1 : (m == 2 ? 2 : ipow(2, m - 2));
  else
    lambda = ipow(q, m - 1) * (q - 1);
  const auto lambda_primes = factorize(lambda);

  // Element orders via the exponent: strip maximal prime powers.
  std::map<std::int64_t, std::vector<int>> valuation_counts;  // p -> counts of v_p(order)
  for (const auto& [p, e] : lambda_primes) valuation_counts[p] = std::vector<int>(e + 1, 0);
  for (std::int64_t x = 1; x < modulus; ++x) {
    if (x % q == 0) continue;
    std::int64_t order = lambda;
    for (const auto& [p, e] : lambda_primes) {
      for (int i = 0; i < e; ++i) {
        if (powmod(x, order / p, modulus) == 1)
          order /= p;
        else
          break;
      }
    }
    for (const auto& [p, e] : lambda_primes) {
      (void)e;
      valuation_counts[p][p_adic_valuation(order, p)]++;
    }
  }

  // In the p-primary part, c_i = #{x : ord(x) | p^i} is p^{sum min(lambda_j, i)}.
  // Cumulative valuation counts over the whole group carry the constant
  // factor |G_{p'}|, which is the count at valuation 0.
  PrimaryDecomposition d;
  for (const auto& [p, counts] : valuation_counts) {
    const int e = static_cast<int>(counts.size()) - 1;
    std::vector<int> logc(e + 1, 0);
    const std::int64_t coprime_part = counts[0];
    std::int64_t cum = 0;
    for (int i = 0; i <= e; ++i) {
      cum += counts[i];
      if (cum % coprime_part != 0)
        throw std::logic_error("unit_group_bruteforce: inconsistent order counts");
      std::int64_t c = cum / coprime_part;
      int t = 0;
      while (c % p == 0) {
        c /= p;
        ++t;
      }
      if (c != 1) throw std::logic_error("unit_group_bruteforce: subgroup size not a prime power");
      logc[i] = t;
    }
    std::vector<int> at_least(e + 2, 0);
    for (int i = 1; i <= e; ++i) at_least[i] = logc[i] - logc[i - 1];
    for (int i = 1; i <= e; ++i)
      for (int c = 0; c < at_least[i] - at_least[i + 1]; ++c) d.add_finite(p, i);
  }
  return d;
}

std::string master_graph_dot(const MasterGraph& g) {
  std::ostringstream os;
  os << "graph master {\n";
  os << "  rankdir=TB;\n  node [shape=plaintext];\n";
  os << "  { rank=same;";
  for (std::int64_t p : g.index.primes) os << " u" << p << " [label=\"" << p << "\"];";
  os << " }\n";
  os << "  { rank=same;";
  for (std::int64_t p : g.index.primes) os << " l" << p << " [label=\"" << p << "\"];";
  os << " }\n";
  for (const Edge& e : g.edges) {
    os << "  u" << e.p << " -- l" << e.q;
    os << (e.kind == EdgeKind::Vertical ? " [penwidth=1];\n" : " [penwidth=2];\n");
  }
  os << "}\n";
  return os.str();
}

std::string master_graph_json(const MasterGraph& g) {
  std::ostringstream os;
  os << "{\"bound\":" << g.bound() << ",\"edges\":[";
  bool first = true;
  for (const Edge& e : g.edges) {
    if (!first) os << ",";
    first = false;
    os << "{\"p\":" << e.p << ",\"q\":" << e.q << ",\"kind\":\""
       << (e.kind == EdgeKind::Vertical ? "vertical" : "sloping") << "\",\"k\":" << e.k
       << ",\"s\":" << e.s << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace grouplab
