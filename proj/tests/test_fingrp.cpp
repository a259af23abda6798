#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "catgal/group.hpp"
#include "catgal/kernels.hpp"
#include "support.hpp"

using namespace catgal;
using namespace catgal::grp;
using testsup::G;

TEST_CASE("trivial table is the identity group") {
  Group g = Group::from_table("triv", {{0}});
  CHECK(g.order() == 1);
  CHECK(g.elt_order(0) == 1);
}

TEST_CASE("closure of (012),(01) gives S3") {
  Group s3 = Group::from_permutations("s3", 3, {{1, 2, 0}, {1, 0, 2}}, 256);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.abelian());
}

TEST_CASE("SL(2,5) generator fixture closes to order 120") {
  Group g = io::load_group(testsup::fixture("groups/sl25_gens.json"));
  CHECK(g.order() == 120);
  CHECK(center(g).order() == 2);
}

TEST_CASE("closure beyond the order bound fails") {
  CHECK_THROWS_AS(Group::from_permutations("s3", 3, {{1, 2, 0}, {1, 0, 2}}, 5), OrderBound);
}

TEST_CASE("invalid tables are rejected") {
  CHECK_THROWS_AS(Group::from_table("bad", {{0, 1}, {1, 1}}), NotAGroup);
  // a Latin loop with identity that is not associative: (1*1)*2 != 1*(1*2)
  CHECK_THROWS_AS(Group::from_table("loop", {{0, 1, 2, 3, 4},
                                             {1, 0, 3, 4, 2},
                                             {2, 4, 0, 1, 3},
                                             {3, 2, 4, 0, 1},
                                             {4, 3, 1, 2, 0}}),
                  NotAGroup);
}

TEST_CASE("subgroup_generated") {
  Group z4 = G("z4");
  CHECK(subgroup_generated(z4, {}).elems == std::vector<int>{0});
  CHECK(subgroup_generated(z4, {2}).elems == std::vector<int>{0, 2});
  Group s3 = G("s3");
  // a 3-cycle generates the order-3 subgroup
  int three = -1;
  for (int x = 0; x < 6; ++x)
    if (s3.elt_order(x) == 3) {
      three = x;
      break;
    }
  CHECK(subgroup_generated(s3, {three}).order() == 3);
  CHECK_THROWS_AS(subgroup_generated(z4, {9}), IndexOutOfRange);
}

TEST_CASE("commutator subgroups") {
  Group z6 = G("z6");
  CHECK(derived_subgroup(z6).order() == 1);
  CHECK(derived_subgroup(G("s3")).order() == 3);
  CHECK(derived_subgroup(G("a5")).order() == 60);
}

TEST_CASE("center") {
  CHECK(center(G("z6")).order() == 6);
  CHECK(center(G("s3")).order() == 1);
  CHECK(center(G("q8")).order() == 2);
}

TEST_CASE("quotient") {
  Group s3 = G("s3");
  auto [q1, p1] = quotient(s3, trivial_subgroup(s3));
  CHECK(q1.order() == 6);
  CHECK(p1.bijective());

  auto a3 = derived_subgroup(s3);
  auto [q2, p2] = quotient(s3, a3);
  CHECK(q2.order() == 2);

  Group q8 = G("q8");
  auto [q3, p3] = quotient(q8, center(q8));
  CHECK(q3.order() == 4);
  CHECK(abelian_invariants(q3) == std::vector<long long>{2, 2});

  // quotient by a non-normal subgroup is rejected
  int t = -1;
  for (int x = 0; x < 6; ++x)
    if (s3.elt_order(x) == 2) {
      t = x;
      break;
    }
  CHECK_THROWS_AS(quotient(s3, subgroup_generated(s3, {t})), NotNormal);
}

TEST_CASE("hom validation") {
  Group s3 = G("s3"), z2 = G("z2");
  Hom sgn = io::load_hom(testsup::fixture("exts/s3_to_z2.json"));
  CHECK(sgn.kernel().order() == 3);
  CHECK(Hom::identity(s3).bijective());
  Group z4 = G("z4");
  CHECK_THROWS_AS(Hom::make(z4, z4, {0, 2, 1, 3}), NotAHom);
}

TEST_CASE("pullback") {
  Group z4 = G("z4"), z2 = G("z2");
  Hom f = Hom::make(z4, z2, {0, 1, 0, 1});

  auto pb_id = pullback(f, Hom::identity(z2));
  CHECK(pb_id.group.order() == 4);
  CHECK(is_isomorphic(pb_id.group, z4));

  auto pb = pullback(f, f);
  CHECK(pb.group.order() == 8);
  CHECK(abelian_invariants(pb.group) == std::vector<long long>{2, 4});
  // projections commute with the cospan on every element
  for (int i = 0; i < 8; ++i) CHECK(f(pb.p1(i)) == f(pb.p2(i)));

  auto pr = product(G("z2"), G("z3"));
  CHECK(pr.group.order() == 6);
  CHECK(abelian_invariants(pr.group) == std::vector<long long>{6});

  CHECK_THROWS_AS(pullback(f, Hom::identity(z4)), CodMismatch);
}

TEST_CASE("abelianization") {
  Group z6 = G("z6");
  auto ab = abelianization(z6);
  CHECK(ab.group.order() == 6);
  CHECK(ab.proj.bijective());
  CHECK(abelian_invariants(abelianization(G("s3")).group) == std::vector<long long>{2});
  CHECK(abelianization(G("a5")).group.order() == 1);
  // idempotent up to isomorphism
  for (const char* n : {"s3", "d4", "q8", "a4", "dic3"}) {
    auto i1 = abelianization(G(n));
    auto i2 = abelianization(i1.group);
    CHECK(is_isomorphic(i1.group, i2.group));
  }
}

TEST_CASE("enumerate_homs basics") {
  auto hs = enumerate_homs(G("z2"), G("z3"));
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].map() == std::vector<int>{0, 0});
  CHECK(enumerate_homs(G("z2"), G("z2")).size() == 2);
}

TEST_CASE("enumerate_homs counts match the brute-force filter oracle") {
  const char* names[] = {"z2", "z3", "z4", "v4", "z6", "s3", "d4", "q8"};
  for (const char* an : names)
    for (const char* bn : names) {
      Group a = G(an), b = G(bn);
      double work = std::pow((double)b.order(), (double)a.order());
      if (work > 2e8) continue;
      auto enumerated = enumerate_homs(a, b);
      auto oracle = kernels::hom_filter_count_serial(a.flat_table().data(), a.order(),
                                                     b.flat_table().data(), b.order());
      CHECK_MESSAGE((std::int64_t)enumerated.size() == oracle,
                    an << " -> " << bn << ": " << enumerated.size() << " vs " << oracle);
    }
}

TEST_CASE("constrained hom enumeration: liftings of SL(2,5) over A5") {
  Group sl25 = G("sl25");
  Hom u = io::load_hom(testsup::fixture("exts/sl25_to_a5.json"));
  auto lifts = enumerate_homs(sl25, sl25, HomConstraint{u, u});
  CHECK(!lifts.empty());
  for (const auto& h : lifts)
    for (int x = 0; x < 120; ++x) CHECK(u(h(x)) == u(x));
}

TEST_CASE("abelian_invariants") {
  CHECK(abelian_invariants(Group::from_table("t", {{0}})).empty());
  CHECK(abelian_invariants(G("v4")) == std::vector<long long>{2, 2});
  CHECK(abelian_invariants(G("z6")) == std::vector<long long>{6});
  CHECK(abelian_invariants(G("z12")) == std::vector<long long>{12});
  CHECK(abelian_invariants(G("z2z4")) == std::vector<long long>{2, 4});
  CHECK(abelian_invariants(G("z2cube")) == std::vector<long long>{2, 2, 2});
  CHECK_THROWS_AS(abelian_invariants(G("s3")), NotAbelian);
}

TEST_CASE("is_isomorphic") {
  Group q8 = G("q8");
  auto w = find_isomorphism(q8, q8);
  REQUIRE(w.has_value());
  CHECK(w->bijective());
  CHECK_FALSE(is_isomorphic(G("z4"), G("v4")));
  CHECK_FALSE(is_isomorphic(G("q8"), G("d4")));
  CHECK(is_isomorphic(G("d4xz2"), product(G("d4"), G("z2")).group));
  Limits save = limits();
  limits().max_order = 4;
  CHECK_THROWS_AS(is_isomorphic(G("q8"), G("d4")), OrderBound);
  limits() = save;
}

TEST_CASE("every fixture group passes the full validator") {
  for (const char* n : {"z2", "z3", "z4", "z6", "z12", "v4", "z2z4", "z2cube", "s3",
                        "d4", "q8", "dic3", "a4", "sl23", "a5", "sl25", "a5xz2",
                        "sl25xz2", "d4xz2", "v4xz2"}) {
    Group g = G(n);
    CHECK_NOTHROW(g.validate());
    // |G| = |N| * |G/N| on a couple of normal subgroups
    auto z = center(g);
    if (z.is_normal()) {
      auto q = quotient(g, z);
      CHECK(g.order() == z.order() * q.group.order());
    }
  }
}

TEST_CASE("quotient of kernel composed with inclusion is zero") {
  auto e = testsup::E("q8_to_v4");
  for (int k : e.kernel.elems) CHECK(e.hom(k) == 0);
}

TEST_CASE("search budget is enforced") {
  CHECK_THROWS_AS(enumerate_homs(G("z2"), G("z2"), std::nullopt, 1), SearchBudgetExceeded);
}

TEST_CASE("parent and codomain mismatches are rejected") {
  Group z4 = G("z4"), v4 = G("v4");
  auto s = subgroup_generated(z4, {2});
  CHECK_THROWS_AS(commutator_subgroup(v4, s, whole(v4)), ParentMismatch);
  CHECK_THROWS_AS(intersect(s, whole(v4)), ParentMismatch);
  CHECK_THROWS_AS(quotient(v4, s), ParentMismatch);
  Hom f = Hom::make(z4, G("z2"), {0, 1, 0, 1});
  CHECK_THROWS_AS(Hom::compose(f, f), CodMismatch);
}

TEST_CASE("random spot checks: subgroup closure and coset sizes") {
  std::mt19937 rng(20240817);
  for (const char* n : {"d4", "a4", "dic3", "sl23"}) {
    Group g = G(n);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> gens;
      for (int i = 0; i < 2; ++i) gens.push_back((int)(rng() % g.order()));
      auto s = subgroup_generated(g, gens);
      CHECK(g.order() % s.order() == 0);  // Lagrange
      for (int x : s.elems) CHECK(s.contains(g.inv(x)));
    }
  }
}
