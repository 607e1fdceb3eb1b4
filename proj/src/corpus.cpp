#include "grouplab/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "grouplab/primes.hpp"

namespace grouplab {

namespace {

void partitions_of(int n, int max_part, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_of(n - part, part, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_of(n, n, cur, out);
  return out;
}

// All abelian isomorphism types of order n as prime-power factor lists
// (prime ascending, exponents descending within a prime).
std::vector<std::vector<std::int64_t>> abelian_types(std::int64_t n) {
  std::vector<std::vector<std::int64_t>> acc{{}};
  for (const auto& [p, e] : factorize(n)) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& lambda : partitions(e))
      for (const auto& prefix : acc) {
        std::vector<std::int64_t> f = prefix;
        for (int part : lambda) f.push_back(ipow(p, part));
        next.push_back(std::move(f));
      }
    acc = std::move(next);
  }
  return acc;
}

std::int64_t mult_order(std::int64_t r, std::int64_t modulus) {
  std::int64_t x = r % modulus, k = 1;
  while (x != 1) {
    x = (x * r) % modulus;
    ++k;
  }
  return k;
}

}  // namespace

std::int64_t spec_order(const GroupSpec& s) {
  switch (s.kind) {
    case SpecKind::Cyclic: return s.n;
    case SpecKind::AbelianProduct: {
      std::int64_t o = 1;
      for (std::int64_t d : s.factors) o *= d;
      return o;
    }
    case SpecKind::DirectProduct: {
      std::int64_t o = 1;
      for (const GroupSpec& part : s.parts) o *= spec_order(part);
      return o;
    }
    case SpecKind::SemidirectScalar: {
      std::int64_t o = s.h;
      for (std::int64_t d : s.factors) o *= d;
      return o;
    }
    case SpecKind::QuaternionM: return ipow(2, static_cast<int>(s.n) + 1);
    case SpecKind::Iwasawa: return s.q * s.c;
    case SpecKind::CayleyTable: return static_cast<std::int64_t>(s.table.size());
  }
  return 1;
}

std::vector<CorpusEntry> build_corpus(int max_order) {
  std::vector<CorpusEntry> entries;
  auto add = [&](const GroupSpec& spec) {
    if (spec_order(spec) > max_order) return;
    entries.push_back({spec_string(spec), spec});
  };

  // Abelian groups of order <= 64, all isomorphism types.
  for (std::int64_t n = 1; n <= 64; ++n)
    for (auto& type : abelian_types(n)) {
      if (type.empty()) type = {1};
      add(GroupSpec::abelian(type));
    }

  // Dihedral family: Z(n) x| Z(2) with the inverting scalar.
  for (std::int64_t n = 3; 2 * n <= 64; ++n) {
    std::vector<std::int64_t> base;
    for (const auto& [p, e] : factorize(n)) base.push_back(ipow(p, e));
    add(GroupSpec::semidirect_scalar(base, 2, n - 1));
  }

  // Dicyclic family (Dic(2) = Q8, Dic(4) = Q16, ...).
  for (int m = 2; 4 * m <= 64; ++m) add(dicyclic_spec(m));

  // Generalized quaternion quotient models M_n.
  for (std::int64_t n = 2; n <= 4; ++n) add(GroupSpec::quaternion_m(n));

  // Scalar semidirect products.
  for (std::int64_t p : {2, 3, 5}) {
    const std::vector<std::vector<std::int64_t>> bases = {
        {p * p}, {p * p * p}, {p, p * p}};
    for (const auto& base : bases) {
      const std::int64_t exp = abelian_exponent(base);
      std::int64_t a_order = 1;
      for (std::int64_t d : base) a_order *= d;
      for (std::int64_t r = 2; r < exp; ++r) {
        if (std::gcd(r, exp) != 1) continue;
        const std::int64_t ord = mult_order(r, exp);
        for (std::int64_t h = ord; h <= 16 && a_order * h <= 128; h += ord)
          add(GroupSpec::semidirect_scalar(base, h, r));
      }
    }
  }

  // Iwasawa factors.
  {
    const std::vector<std::pair<std::int64_t, std::int64_t>> pq = {
        {2, 3}, {2, 5}, {3, 7}, {5, 11}, {3, 13}};
    for (const auto& [p, q] : pq)
      for (std::int64_t c : {p, p * p})
        for (std::int64_t z = 2; z < q; ++z)
          if (mult_order(z, q) == p) add(GroupSpec::iwasawa(p, q, c, z));
  }

  // Direct products: selected nonabelian members times small abelian groups.
  {
    std::vector<GroupSpec> left = {
        GroupSpec::quaternion_m(2),
        GroupSpec::quaternion_m(3),
        GroupSpec::quaternion_m(4),
        dicyclic_spec(4),
        GroupSpec::semidirect_scalar({3}, 2, 2),    // S3 model
        GroupSpec::semidirect_scalar({4}, 2, 3),    // dihedral of order 8
        GroupSpec::semidirect_scalar({9}, 3, 4),    // order 27 scalar group
        GroupSpec::semidirect_scalar({8}, 2, 5),    // modular group of order 16
        GroupSpec::iwasawa(2, 3, 2, 2),
        GroupSpec::iwasawa(3, 7, 3, 2),
        GroupSpec::iwasawa(3, 7, 9, 2),
        GroupSpec::iwasawa(3, 13, 3, 3),
        GroupSpec::iwasawa(5, 11, 5, 3),
    };
    std::vector<GroupSpec> right = {
        GroupSpec::abelian({2}),    GroupSpec::abelian({3}),    GroupSpec::abelian({4}),
        GroupSpec::abelian({5}),    GroupSpec::abelian({2, 2}), GroupSpec::abelian({7}),
        GroupSpec::abelian({8}),    GroupSpec::abelian({9}),    GroupSpec::abelian({25}),
        GroupSpec::abelian({27}),   GroupSpec::abelian({2, 4}),
    };
    for (const GroupSpec& x : left)
      for (const GroupSpec& y : right) add(GroupSpec::direct({x, y}));
  }

  std::sort(entries.begin(), entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const CorpusEntry& a, const CorpusEntry& b) {
                              return a.name == b.name;
                            }),
                entries.end());
  return entries;
}

}  // namespace grouplab
