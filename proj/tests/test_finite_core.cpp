#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "grouplab/group_spec.hpp"
#include "grouplab/lattice.hpp"
#include "grouplab/primegraph.hpp"

using namespace grouplab;

TEST_CASE("cyclic and abelian construction") {
  const FiniteGroup z9 = construct(GroupSpec::cyclic(9));
  CHECK(z9.order == 9);
  CHECK(z9.is_abelian());
  CHECK(element_order(z9, 1) == 9);
  CHECK(element_order(z9, 0) == 1);
  CHECK(element_order(z9, 3) == 3);

  const FiniteGroup v = construct(GroupSpec::abelian({2, 2}));
  CHECK(v.order == 4);
  for (int x = 1; x < 4; ++x) CHECK(element_order(v, static_cast<elem_t>(x)) == 2);

  const FiniteGroup t = construct(GroupSpec::abelian({}));
  CHECK(t.order == 1);
}

TEST_CASE("construction order cap") {
  CHECK_THROWS_AS(construct(GroupSpec::cyclic(5000)), std::invalid_argument);
}

TEST_CASE("semidirect scalar construction") {
  // Order 27 scalar group: Z(9) x| Z(3) with b acting by 4 = 1 + 3.
  const FiniteGroup g = construct(GroupSpec::semidirect_scalar({9}, 3, 4));
  CHECK(g.order == 27);
  CHECK_FALSE(g.is_abelian());
  const elem_t a = 1 * 3 + 0;  // (1, 0)
  const elem_t b = 0 * 3 + 1;  // (0, 1)
  CHECK(element_order(g, a) == 9);
  CHECK(element_order(g, b) == 3);
  // a^b = a^4, with a^b written as b a b^-1.
  elem_t a4 = 0;
  for (int i = 0; i < 4; ++i) a4 = g.op(a4, a);
  CHECK(g.conj(b, a) == a4);

  // r = 1 gives the direct product.
  const FiniteGroup direct = construct(GroupSpec::semidirect_scalar({9}, 3, 1));
  CHECK(direct.is_abelian());
  const FiniteGroup product =
      construct(GroupSpec::direct({GroupSpec::cyclic(9), GroupSpec::cyclic(3)}));
  CHECK(direct.mul == product.mul);

  // Invalid scalars are rejected.
  CHECK_THROWS_AS(construct(GroupSpec::semidirect_scalar({9}, 3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(construct(GroupSpec::semidirect_scalar({9}, 2, 4)), std::invalid_argument);
}

TEST_CASE("quaternion quotient model") {
  const FiniteGroup q8 = construct(GroupSpec::quaternion_m(2));
  CHECK(q8.order == 8);
  CHECK_FALSE(q8.is_abelian());
  const auto [a, b] = quaternion_m_generators(2, q8);
  CHECK(element_order(q8, a) == 4);
  CHECK(element_order(q8, b) == 4);
  CHECK(q8.conj(b, a) == q8.inv[a]);
  CHECK(q8.op(a, a) == q8.op(b, b));

  // Every subgroup of Q8 is normal.
  const SubgroupLattice lat = enumerate_subgroups(q8);
  CHECK(lat.size() == 6);
  for (int i = 0; i < lat.size(); ++i) CHECK(is_normal(q8, lat.subs[i]));

  for (std::int64_t n : {2, 3, 4}) {
    const FiniteGroup m = construct(GroupSpec::quaternion_m(n));
    CHECK(m.order == (1 << (n + 1)));
    const auto gens = quaternion_m_generators(n, m);
    CHECK(element_order(m, gens.a) == 4);
    CHECK(element_order(m, gens.b) == (1 << n));
    // [a, b] = a^2.
    CHECK(m.commutator(gens.a, gens.b) == m.op(gens.a, gens.a));
  }
}

TEST_CASE("iwasawa construction") {
  const FiniteGroup g = construct(GroupSpec::iwasawa(3, 7, 3, 2));
  CHECK(g.order == 21);
  CHECK_FALSE(g.is_abelian());
  // A = Z(7) is normal; ids (a, t) = a * 3 + t.
  std::vector<elem_t> base_members;
  for (int a = 0; a < 7; ++a) base_members.push_back(static_cast<elem_t>(a * 3));
  const Subgroup base = make_subgroup(g, base_members);
  CHECK(is_normal(g, base));

  CHECK_THROWS_AS(construct(GroupSpec::iwasawa(3, 7, 3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(construct(GroupSpec::iwasawa(3, 7, 3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(construct(GroupSpec::iwasawa(3, 5, 3, 2)), std::invalid_argument);

  // S3 as Iwasawa(2, 3, 2, 2).
  const FiniteGroup s3 = construct(GroupSpec::iwasawa(2, 3, 2, 2));
  CHECK(s3.order == 6);
  CHECK_FALSE(s3.is_abelian());
}

TEST_CASE("dicyclic tables") {
  const FiniteGroup q8 = construct(dicyclic_spec(2));
  CHECK(q8.order == 8);
  int order4 = 0;
  for (int x = 0; x < 8; ++x)
    if (element_order(q8, static_cast<elem_t>(x)) == 4) ++order4;
  CHECK(order4 == 6);  // Q8 signature: one involution, six elements of order 4

  const FiniteGroup q16 = construct(dicyclic_spec(4));
  CHECK(q16.order == 16);
  int involutions = 0;
  for (int x = 0; x < 16; ++x)
    if (element_order(q16, static_cast<elem_t>(x)) == 2) ++involutions;
  CHECK(involutions == 1);  // generalized quaternion: unique involution
}

TEST_CASE("raw cayley tables are fully verified") {
  // Z(3) given directly.
  CHECK(construct(GroupSpec::cayley({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})).order == 3);
  // A non-associative latin square with two-sided identity is rejected.
  CHECK_THROWS_AS(construct(GroupSpec::cayley({{0, 1, 2, 3, 4},
                                               {1, 0, 3, 4, 2},
                                               {2, 4, 0, 1, 3},
                                               {3, 2, 4, 0, 1},
                                               {4, 3, 1, 2, 0}})),
                  std::invalid_argument);
  // Missing identity.
  CHECK_THROWS_AS(construct(GroupSpec::cayley({{1, 0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("subgroup generation") {
  const FiniteGroup m2 = construct(GroupSpec::quaternion_m(2));
  CHECK(subgroup_generated(m2, {}).order() == 1);
  const auto [a, b] = quaternion_m_generators(2, m2);
  CHECK(subgroup_generated(m2, {a}).order() == 4);
  CHECK(subgroup_generated(m2, {a, b}).order() == 8);

  // Two distinct reflections generate the whole S3 model.
  const FiniteGroup s3 = construct(GroupSpec::iwasawa(2, 3, 2, 2));
  std::vector<elem_t> reflections;
  for (int x = 1; x < 6; ++x)
    if (element_order(s3, static_cast<elem_t>(x)) == 2)
      reflections.push_back(static_cast<elem_t>(x));
  REQUIRE(reflections.size() >= 2);
  CHECK(subgroup_generated(s3, {reflections[0], reflections[1]}).order() == 6);
}

TEST_CASE("center, centralizer, commutator subgroup") {
  const FiniteGroup q8 = construct(GroupSpec::quaternion_m(2));
  CHECK(center(q8).order() == 2);

  const FiniteGroup iw = construct(GroupSpec::iwasawa(3, 7, 3, 2));
  const Subgroup derived = commutator_subgroup(iw);
  CHECK(derived.order() == 7);
  for (elem_t x : derived.members)
    if (x != 0) CHECK(element_order(iw, x) == 7);

  const FiniteGroup ab = construct(GroupSpec::abelian({4, 3}));
  const SubgroupLattice lat = enumerate_subgroups(ab);
  for (int i = 0; i < lat.size(); ++i)
    CHECK(centralizer(ab, lat.subs[i]).order() == ab.order);
  CHECK(commutator_subgroup(ab).order() == 1);
}

TEST_CASE("sigma elements") {
  const FiniteGroup s3 = construct(GroupSpec::iwasawa(2, 3, 2, 2));
  const SigmaElements three = sigma_elements(s3, {3});
  CHECK(three.elements.size() == 3);
  CHECK(three.is_subgroup);
  const SigmaElements two = sigma_elements(s3, {2});
  CHECK(two.elements.size() == 4);
  CHECK_FALSE(two.is_subgroup);
  const SigmaElements all = sigma_elements(s3, {2, 3});
  CHECK(all.elements.size() == 6);
  CHECK(all.is_subgroup);
}

TEST_CASE("quotient groups") {
  const FiniteGroup z4 = construct(GroupSpec::cyclic(4));
  const Quotient top = quotient_group(z4, whole_group(z4));
  CHECK(top.group.order == 1);

  const FiniteGroup q8 = construct(GroupSpec::quaternion_m(2));
  const auto [a, b] = quaternion_m_generators(2, q8);
  (void)b;
  const Quotient q = quotient_group(q8, subgroup_generated(q8, {a}));
  CHECK(q.group.order == 2);

  const FiniteGroup g27 = construct(GroupSpec::semidirect_scalar({9}, 3, 4));
  std::vector<elem_t> base;
  for (int i = 0; i < 9; ++i) base.push_back(static_cast<elem_t>(i * 3));
  const Quotient q3 = quotient_group(g27, make_subgroup(g27, base));
  CHECK(q3.group.order == 3);
  CHECK(element_order(q3.group, 1) == 3);

  // Non-normal subgroups are rejected.
  const FiniteGroup s3 = construct(GroupSpec::iwasawa(2, 3, 2, 2));
  elem_t refl = 0;
  for (int x = 1; x < 6; ++x)
    if (element_order(s3, static_cast<elem_t>(x)) == 2) {
      refl = static_cast<elem_t>(x);
      break;
    }
  CHECK_THROWS_AS(quotient_group(s3, subgroup_generated(s3, {refl})), std::invalid_argument);
}

TEST_CASE("subgroup as group embeds faithfully") {
  const FiniteGroup iw = construct(GroupSpec::iwasawa(3, 7, 3, 2));
  const Subgroup a = commutator_subgroup(iw);
  const SubgroupEmbedding emb = subgroup_as_group(iw, a);
  CHECK(emb.group.order == 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      CHECK(emb.to_parent[emb.group.op(i, j)] == iw.op(emb.to_parent[i], emb.to_parent[j]));
}

TEST_CASE("spec json round trip") {
  const GroupSpec spec = GroupSpec::direct(
      {GroupSpec::quaternion_m(2), GroupSpec::iwasawa(2, 3, 2, 2), GroupSpec::abelian({4, 2})});
  const GroupSpec back = spec_from_json(spec_to_json(spec));
  CHECK(spec_string(back) == spec_string(spec));
  const FiniteGroup g1 = construct(spec);
  const FiniteGroup g2 = construct(back);
  CHECK(g1.mul == g2.mul);
  CHECK(spec_string(spec) == "DP(M(2),Iw(p=2,q=3,c=2,z=2),Ab(4x2))");

  const GroupSpec sds = spec_from_json(spec_to_json(GroupSpec::semidirect_scalar({9}, 3, 4)));
  CHECK(spec_string(sds) == "SDS(9;h=3;r=4)");
  CHECK(construct(sds).order == 27);
}

TEST_CASE("cayley table export") {
  const FiniteGroup z2 = construct(GroupSpec::cyclic(2));
  CHECK(cayley_table_json(z2) == "{\"mul\":[[0,1],[1,0]],\"order\":2}");
}

TEST_CASE("brute-forced unit groups match modular arithmetic tables") {
  // Two independent routes to (Z/q^m)^x: the order-counting decomposition,
  // and a raw multiplication table over the unit residues. Equal sorted
  // element-order profiles pin down the same abelian group.
  for (const auto& [q, m] : std::vector<std::pair<std::int64_t, int>>{
           {3, 1}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {13, 2}, {2, 3}, {2, 5}, {2, 8}, {11, 1}}) {
    std::int64_t modulus = 1;
    for (int i = 0; i < m; ++i) modulus *= q;
    if (modulus > 512) continue;
    std::vector<std::int64_t> units;
    for (std::int64_t x = 1; x < modulus; ++x)
      if (x % q != 0) units.push_back(x);
    std::vector<int> index(modulus, -1);
    for (std::size_t i = 0; i < units.size(); ++i) index[units[i]] = static_cast<int>(i);
    // Put 1 at id 0.
    std::swap(units[0], units[index[1]]);
    for (std::size_t i = 0; i < units.size(); ++i) index[units[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> table(units.size(), std::vector<int>(units.size()));
    for (std::size_t i = 0; i < units.size(); ++i)
      for (std::size_t j = 0; j < units.size(); ++j)
        table[i][j] = index[(units[i] * units[j]) % modulus];
    const FiniteGroup unit_group = construct(GroupSpec::cayley(table));

    const PrimaryDecomposition d = unit_group_bruteforce(q, m);
    std::vector<std::int64_t> factors;
    for (const PrimaryFactor& f : d.factors) {
      std::int64_t v = 1;
      for (int i = 0; i < f.exponent; ++i) v *= f.p;
      factors.push_back(v);
    }
    if (factors.empty()) factors = {1};
    const FiniteGroup model = construct(GroupSpec::abelian(factors));

    REQUIRE(model.order == unit_group.order);
    std::vector<int> orders_a, orders_b;
    for (int x = 0; x < model.order; ++x) {
      orders_a.push_back(element_order(model, static_cast<elem_t>(x)));
      orders_b.push_back(element_order(unit_group, static_cast<elem_t>(x)));
    }
    std::sort(orders_a.begin(), orders_a.end());
    std::sort(orders_b.begin(), orders_b.end());
    CHECK(orders_a == orders_b);
  }
}
