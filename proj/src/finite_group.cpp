#include "grouplab/finite_group.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "grouplab/primes.hpp"

namespace grouplab {

int Bits::count() const {
  int c = 0;
  for (std::uint64_t x : w) c += std::popcount(x);
  return c;
}

bool Bits::subset_of(const Bits& other) const {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] & ~other.w[i]) return false;
  return true;
}

Bits Bits::and_with(const Bits& other) const {
  Bits r = *this;
  for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= other.w[i];
  return r;
}

Bits Bits::or_with(const Bits& other) const {
  Bits r = *this;
  for (std::size_t i = 0; i < w.size(); ++i) r.w[i] |= other.w[i];
  return r;
}

void FiniteGroup::verify() const {
  const int n = order;
  if (n < 1) throw std::invalid_argument("group table: order must be >= 1");
  if (static_cast<int>(mul.size()) != n * n) throw std::invalid_argument("group table: bad size");
  for (elem_t v : mul)
    if (v >= n) throw std::invalid_argument("group table: entry out of range");
  for (int a = 0; a < n; ++a) {
    if (op(0, a) != a || op(a, 0) != a)
      throw std::invalid_argument("group table: 0 is not an identity");
  }
  if (static_cast<int>(inv.size()) != n) throw std::invalid_argument("group table: bad inv size");
  for (int a = 0; a < n; ++a) {
    if (inv[a] >= n || op(a, inv[a]) != 0 || op(inv[a], a) != 0)
      throw std::invalid_argument("group table: inverses inconsistent");
  }
  // Rows and columns must be permutations (Latin square).
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) seen[op(a, b)] = 1;
    for (int b = 0; b < n; ++b)
      if (!seen[b]) throw std::invalid_argument("group table: row is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) seen[op(b, a)] = 1;
    for (int b = 0; b < n; ++b)
      if (!seen[b]) throw std::invalid_argument("group table: column is not a permutation");
  }
  if (n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const elem_t ab = op(a, b);
        for (int c = 0; c < n; ++c)
          if (op(ab, c) != op(a, op(b, c)))
            throw std::invalid_argument("group table: not associative");
      }
  } else {
    // Light's associativity test on a generating set.
    std::vector<elem_t> gens;
    Bits reached(n);
    reached.set(0);
    std::vector<elem_t> closure{0};
    for (int x = 1; x < n; ++x) {
      if (reached.test(x)) continue;
      gens.push_back(static_cast<elem_t>(x));
      reached.set(x);
      closure.push_back(static_cast<elem_t>(x));
      std::vector<elem_t> frontier{static_cast<elem_t>(x)};
      while (!frontier.empty()) {
        std::vector<elem_t> next;
        for (std::size_t fi = 0; fi < frontier.size(); ++fi)
          for (std::size_t i = 0; i < closure.size(); ++i)
            for (elem_t y : {op(frontier[fi], closure[i]), op(closure[i], frontier[fi])})
              if (!reached.test(y)) {
                reached.set(y);
                closure.push_back(y);
                next.push_back(y);
              }
        frontier = std::move(next);
      }
    }
    for (elem_t g : gens)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (op(op(a, g), b) != op(a, op(g, b)))
            throw std::invalid_argument("group table: not associative");
  }
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

std::vector<std::int64_t> FiniteGroup::prime_support() const {
  std::vector<std::int64_t> out;
  for (const auto& [p, e] : factorize(order)) {
    (void)e;
    out.push_back(p);
  }
  return out;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<elem_t> members,
                       std::vector<elem_t> gens) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup s;
  s.bits = Bits(g.order);
  for (elem_t m : members) s.bits.set(m);
  s.members = std::move(members);
  s.gens = std::move(gens);
  return s;
}

int element_order(const FiniteGroup& g, elem_t x) {
  int n = 1;
  elem_t y = x;
  while (y != 0) {
    y = g.op(y, x);
    ++n;
  }
  return n;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<elem_t>& gens) {
  Bits bits(g.order);
  bits.set(0);
  std::vector<elem_t> members{0};
  std::vector<elem_t> frontier{0};
  std::vector<elem_t> gen_list;
  for (elem_t x : gens)
    if (x != 0) gen_list.push_back(x);
  for (elem_t x : gen_list) {
    if (!bits.test(x)) {
      bits.set(x);
      members.push_back(x);
      frontier.push_back(x);
    }
  }
  while (!frontier.empty()) {
    std::vector<elem_t> next;
    for (elem_t f : frontier) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        const elem_t y = g.op(f, members[i]);
        if (!bits.test(y)) {
          bits.set(y);
          members.push_back(y);
          next.push_back(y);
        }
        const elem_t z = g.op(members[i], f);
        if (!bits.test(z)) {
          bits.set(z);
          members.push_back(z);
          next.push_back(z);
        }
      }
    }
    frontier = std::move(next);
  }
  return make_subgroup(g, std::move(members), gens);
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return make_subgroup(g, {0}, {}); }

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<elem_t> all(g.order);
  for (int i = 0; i < g.order; ++i) all[i] = static_cast<elem_t>(i);
  return make_subgroup(g, std::move(all));
}

Subgroup center(const FiniteGroup& g) {
  std::vector<elem_t> ms;
  for (int x = 0; x < g.order; ++x) {
    bool central = true;
    for (int y = 0; y < g.order && central; ++y)
      if (g.op(x, y) != g.op(y, x)) central = false;
    if (central) ms.push_back(static_cast<elem_t>(x));
  }
  return make_subgroup(g, std::move(ms));
}

Subgroup centralizer_of_set(const FiniteGroup& g, const std::vector<elem_t>& xs) {
  std::vector<elem_t> ms;
  for (int y = 0; y < g.order; ++y) {
    bool ok = true;
    for (elem_t x : xs)
      if (g.op(y, x) != g.op(x, y)) {
        ok = false;
        break;
      }
    if (ok) ms.push_back(static_cast<elem_t>(y));
  }
  return make_subgroup(g, std::move(ms));
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  return centralizer_of_set(g, s.members);
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<elem_t> gens;
  Bits seen(g.order);
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      const elem_t c = g.commutator(static_cast<elem_t>(x), static_cast<elem_t>(y));
      if (!seen.test(c)) {
        seen.set(c);
        gens.push_back(c);
      }
    }
  return subgroup_generated(g, gens);
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (int x = 0; x < g.order; ++x)
    for (elem_t m : s.members)
      if (!s.contains(g.conj(static_cast<elem_t>(x), m))) return false;
  return true;
}

bool subgroup_is_abelian(const FiniteGroup& g, const Subgroup& s) {
  for (std::size_t i = 0; i < s.members.size(); ++i)
    for (std::size_t j = i + 1; j < s.members.size(); ++j)
      if (g.op(s.members[i], s.members[j]) != g.op(s.members[j], s.members[i])) return false;
  return true;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, elem_t x) {
  std::vector<elem_t> ms;
  ms.reserve(s.members.size());
  for (elem_t m : s.members) ms.push_back(g.conj(x, m));
  return make_subgroup(g, std::move(ms));
}

SigmaElements sigma_elements(const FiniteGroup& g, const std::set<std::int64_t>& sigma) {
  SigmaElements r;
  for (int x = 0; x < g.order; ++x) {
    const int ord = element_order(g, static_cast<elem_t>(x));
    bool ok = true;
    for (const auto& [p, e] : factorize(ord)) {
      (void)e;
      if (!sigma.count(p)) {
        ok = false;
        break;
      }
    }
    if (ok) r.elements.push_back(static_cast<elem_t>(x));
  }
  Bits bits(g.order);
  for (elem_t x : r.elements) bits.set(x);
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

Subgroup primary_component(const FiniteGroup& g, const Subgroup& abelian, std::int64_t p) {
  std::vector<elem_t> ms;
  for (elem_t x : abelian.members) {
    int ord = element_order(g, x);
    bool ppower = true;
    while (ord > 1) {
      if (ord % p != 0) {
        ppower = false;
        break;
      }
      ord /= static_cast<int>(p);
    }
    if (ppower) ms.push_back(x);
  }
  return make_subgroup(g, std::move(ms));
}

Quotient quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw std::invalid_argument("quotient_group: subgroup is not normal");
  const int cosets = g.order / n.order();
  std::vector<elem_t> coset_of(g.order, 0xffff);
  std::vector<elem_t> reps;
  for (int x = 0; x < g.order; ++x) {
    if (coset_of[x] != 0xffff) continue;
    const elem_t id = static_cast<elem_t>(reps.size());
    reps.push_back(static_cast<elem_t>(x));
    for (elem_t m : n.members) coset_of[g.op(static_cast<elem_t>(x), m)] = id;
  }
  // Scanning ids ascending makes coset ids ordered by least member; the
  // identity coset contains 0 and gets id 0.
  Quotient q;
  q.coset_of = std::move(coset_of);
  q.group.order = cosets;
  q.group.mul.assign(static_cast<std::size_t>(cosets) * cosets, 0);
  q.group.inv.assign(cosets, 0);
  for (int i = 0; i < cosets; ++i)
    for (int j = 0; j < cosets; ++j)
      q.group.mul[static_cast<std::size_t>(i) * cosets + j] = q.coset_of[g.op(reps[i], reps[j])];
  for (int i = 0; i < cosets; ++i) q.group.inv[i] = q.coset_of[g.inv[reps[i]]];
  q.group.verify();
  return q;
}

SubgroupEmbedding subgroup_as_group(const FiniteGroup& g, const Subgroup& s) {
  const int n = s.order();
  std::vector<elem_t> index_of(g.order, 0xffff);
  for (int i = 0; i < n; ++i) index_of[s.members[i]] = static_cast<elem_t>(i);
  SubgroupEmbedding out;
  out.to_parent = s.members;
  out.group.order = n;
  out.group.mul.assign(static_cast<std::size_t>(n) * n, 0);
  out.group.inv.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const elem_t prod = g.op(s.members[i], s.members[j]);
      if (index_of[prod] == 0xffff)
        throw std::invalid_argument("subgroup_as_group: member set is not closed");
      out.group.mul[static_cast<std::size_t>(i) * n + j] = index_of[prod];
    }
    out.group.inv[i] = index_of[g.inv[s.members[i]]];
  }
  out.group.verify();
  return out;
}

FiniteGroup direct_product_table(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.order = a.order * b.order;
  g.mul.assign(static_cast<std::size_t>(g.order) * g.order, 0);
  g.inv.assign(g.order, 0);
  auto id = [&](int ia, int ib) { return static_cast<elem_t>(ia * b.order + ib); };
  for (int ia = 0; ia < a.order; ++ia)
    for (int ib = 0; ib < b.order; ++ib) {
      for (int ja = 0; ja < a.order; ++ja)
        for (int jb = 0; jb < b.order; ++jb)
          g.mul[static_cast<std::size_t>(id(ia, ib)) * g.order + id(ja, jb)] =
              id(a.op(ia, ja), b.op(ib, jb));
      g.inv[id(ia, ib)] = id(a.inv[ia], b.inv[ib]);
    }
  return g;
}

std::string cayley_table_json(const FiniteGroup& g) {
  nlohmann::json j;
  j["order"] = g.order;
  std::vector<std::vector<int>> rows(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) rows[a][b] = g.op(a, b);
  j["mul"] = rows;
  if (!g.labels.empty()) j["labels"] = g.labels;
  return j.dump();
}

}  // namespace grouplab
