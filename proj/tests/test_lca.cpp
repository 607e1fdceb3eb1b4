#include <doctest.h>

#include <stdexcept>

#include "grouplab/lca.hpp"

using namespace grouplab;

namespace {

Component cyclic(int m) {
  Component c;
  c.kind = CompKind::Cyclic;
  c.m = m;
  return c;
}

Component of_kind(CompKind k) {
  Component c;
  c.kind = k;
  return c;
}

Component general_finite(int m) {
  Component c;
  c.kind = CompKind::GeneralAbelian;
  c.m = m;
  return c;
}

Component general_infinite() {
  Component c;
  c.kind = CompKind::GeneralAbelian;
  c.infinite_exponent = true;
  return c;
}

PrimaryDecomposition finite_only(std::initializer_list<std::pair<std::int64_t, int>> parts) {
  PrimaryDecomposition d;
  for (const auto& [p, k] : parts) d.add_finite(p, k);
  return d;
}

}  // namespace

TEST_CASE("classification of inductively monothetic descriptors") {
  LcaDescriptor a;
  a.comps[2] = cyclic(4);
  a.comps[3] = of_kind(CompKind::Zp);
  const ClassifyResult r = classify_inductively_monothetic(a);
  REQUIRE(r.accepted);
  CHECK(r.partition.piC == std::set<std::int64_t>{3});
  CHECK(r.partition.piD == std::set<std::int64_t>{2});
  CHECK(r.partition.piA.empty());
  CHECK(r.partition.piB.empty());

  LcaDescriptor b;
  b.comps[2] = of_kind(CompKind::Prufer);
  const ClassifyResult rb = classify_inductively_monothetic(b);
  REQUIRE(rb.accepted);
  CHECK(rb.partition.piB == std::set<std::int64_t>{2});

  LcaDescriptor c;
  c.comps[5] = general_finite(1);
  const ClassifyResult rc = classify_inductively_monothetic(c);
  CHECK_FALSE(rc.accepted);
  CHECK(rc.offending_prime == 5);
}

TEST_CASE("divisible / procyclic split") {
  LcaDescriptor a;
  a.comps[2] = of_kind(CompKind::Prufer);
  a.comps[3] = cyclic(2);
  const SplitResult s = split_divisible_procyclic(a);
  CHECK(s.divisible.comps.size() == 1);
  CHECK(s.divisible.comps.count(2) == 1);
  CHECK(s.procyclic.comps.size() == 1);
  CHECK(s.procyclic.comps.count(3) == 1);

  // Recombination is the identity.
  LcaDescriptor merged;
  for (const auto& [p, comp] : s.divisible.comps) merged.comps[p] = comp;
  for (const auto& [p, comp] : s.procyclic.comps) merged.comps[p] = comp;
  CHECK(merged.comps.size() == a.comps.size());

  LcaDescriptor q;
  q.comps[5] = of_kind(CompKind::Qp);
  const SplitResult sq = split_divisible_procyclic(q);
  CHECK(sq.divisible.comps.count(5) == 1);
  CHECK(sq.procyclic.trivial());

  LcaDescriptor z;
  z.comps[2] = of_kind(CompKind::Zp);
  z.comps[3] = of_kind(CompKind::Zp);
  const SplitResult sz = split_divisible_procyclic(z);
  CHECK(sz.divisible.trivial());
  CHECK(sz.procyclic.comps.size() == 2);

  LcaDescriptor bad;
  bad.comps[5] = general_finite(2);
  CHECK_THROWS_AS(split_divisible_procyclic(bad), std::invalid_argument);
}

TEST_CASE("pi-procyclic test") {
  LcaDescriptor a;
  a.comps[2] = cyclic(3);
  a.comps[7] = of_kind(CompKind::Zp);
  CHECK(is_pi_procyclic(a));

  LcaDescriptor b;
  b.comps[2] = of_kind(CompKind::Prufer);
  CHECK_FALSE(is_pi_procyclic(b));

  CHECK(is_pi_procyclic(LcaDescriptor{}));

  // Classification with empty piA and piB is the same statement.
  const ClassifyResult r = classify_inductively_monothetic(a);
  CHECK((r.accepted && r.partition.piA.empty() && r.partition.piB.empty()) == is_pi_procyclic(a));
}

TEST_CASE("saut components") {
  CHECK(saut_component(3, ExponentSpec::finite(2)) == finite_only({{2, 1}, {3, 1}}));
  CHECK(saut_component(2, ExponentSpec::finite(3)) == finite_only({{2, 1}, {2, 1}}));
  CHECK(saut_component(7, ExponentSpec::finite(0)).is_trivial());
  CHECK(saut_component(2, ExponentSpec::finite(1)).is_trivial());
  CHECK(saut_component(2, ExponentSpec::finite(2)) == finite_only({{2, 1}}));

  PrimaryDecomposition zq = saut_component(5, ExponentSpec::inf());
  PrimaryDecomposition expected = finite_only({{2, 2}});
  expected.add_omega(5);
  CHECK(zq == expected);

  // Order q^{m-1}(q-1) for odd q, 2^{m-1} for q = 2.
  for (std::int64_t q : {3, 5, 7, 13}) {
    for (int m = 1; m <= 3; ++m) {
      const std::int64_t order = saut_component(q, ExponentSpec::finite(m)).finite_order();
      std::int64_t expect = q - 1;
      for (int i = 1; i < m; ++i) expect *= q;
      CHECK(order == expect);
    }
  }
  for (int m = 1; m <= 5; ++m) {
    std::int64_t expect = 1;
    for (int i = 1; i < m; ++i) expect *= 2;
    CHECK(saut_component(2, ExponentSpec::finite(m)).finite_order() == expect);
  }
}

TEST_CASE("saut components equal the brute-forced unit groups") {
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 31}) {
    for (int m = 1; m <= 3; ++m)
      CHECK(saut_component(q, ExponentSpec::finite(m)) == unit_group_bruteforce(q, m));
  }
}

TEST_CASE("exponent 2, 3, 4 gives at most two scalar automorphisms") {
  CHECK(saut_component(2, ExponentSpec::finite(1)).finite_order() == 1);
  CHECK(saut_component(3, ExponentSpec::finite(1)).finite_order() == 2);
  CHECK(saut_component(2, ExponentSpec::finite(2)).finite_order() == 2);
}

TEST_CASE("saut decomposition per upper prime") {
  LcaDescriptor a;
  a.comps[7] = cyclic(1);
  const SautResult r = saut_decomposition(a);
  REQUIRE(r.primary.size() == 2);
  CHECK(r.primary.at(2) == finite_only({{2, 1}}));
  CHECK(r.primary.at(3) == finite_only({{3, 1}}));

  LcaDescriptor b;
  b.comps[3] = general_infinite();
  const SautResult rb = saut_decomposition(b);
  REQUIRE(rb.primary.size() == 2);
  CHECK(rb.primary.at(2) == finite_only({{2, 1}}));
  PrimaryDecomposition omega3;
  omega3.add_omega(3);
  CHECK(rb.primary.at(3) == omega3);

  // Prufer components behave like infinite exponent and are flagged.
  LcaDescriptor c;
  c.comps[3] = of_kind(CompKind::Prufer);
  const SautResult rc = saut_decomposition(c);
  CHECK(rc.primary == rb.primary);
  CHECK(rc.notes.size() == 1);

  // Qp components are an input error for the scalar calculus.
  LcaDescriptor d;
  d.comps[3] = of_kind(CompKind::Qp);
  CHECK_THROWS_AS(saut_decomposition(d), std::invalid_argument);
}

TEST_CASE("total scalar group of a small-exponent descriptor") {
  LcaDescriptor a;
  a.comps[2] = cyclic(2);  // exponent 4
  CHECK(saut_decomposition(a).total().finite_order() <= 2);
  LcaDescriptor b;
  b.comps[3] = cyclic(1);  // exponent 3
  CHECK(saut_decomposition(b).total().finite_order() <= 2);
  LcaDescriptor c;
  c.comps[2] = cyclic(1);  // exponent 2
  CHECK(saut_decomposition(c).total().finite_order() == 1);
}

TEST_CASE("prime graph of a descriptor") {
  LcaDescriptor a;
  a.comps[3] = cyclic(1);
  const MasterGraph g = prime_graph_of_lca(a, 13);
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0].p == 2);
  CHECK(g.edges[0].q == 3);
  CHECK(g.edges[1].p == 3);
  CHECK(g.edges[1].kind == EdgeKind::Vertical);

  LcaDescriptor b;
  b.comps[2] = cyclic(1);  // SAut(Z(2)) is trivial
  CHECK(prime_graph_of_lca(b, 13).edges.empty());

  CHECK(prime_graph_of_lca(LcaDescriptor{}, 5).edges.empty());
  CHECK_THROWS_AS(prime_graph_of_lca(a, 2), std::invalid_argument);
}

TEST_CASE("descriptor json round trip") {
  LcaDescriptor a;
  a.comps[2] = cyclic(3);
  a.comps[3] = of_kind(CompKind::Zp);
  a.comps[5] = general_infinite();
  const std::string text = descriptor_to_json(a);
  const LcaDescriptor back = descriptor_from_json(text);
  REQUIRE(back.comps.size() == 3);
  CHECK(back.comps.at(2).kind == CompKind::Cyclic);
  CHECK(back.comps.at(2).m == 3);
  CHECK(back.comps.at(3).kind == CompKind::Zp);
  CHECK(back.comps.at(5).infinite_exponent);

  CHECK_THROWS(descriptor_from_json("{\"4\": {\"kind\": \"zp\"}}"));
  CHECK_THROWS(descriptor_from_json("{\"3\": {\"kind\": \"wat\"}}"));
}
