#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catgal/groupoid.hpp"
#include "catgal/structure.hpp"
#include "support.hpp"

using namespace catgal;
using namespace catgal::grp;
using namespace catgal::gpd;
using testsup::E;
using testsup::G;

static InternalGroupoid discrete(const Group& g) {
  GroupoidParts p;
  p.obj = Carrier::of_group(g);
  p.arr = Carrier::of_group(g);
  const int n = g.order();
  p.d.resize(n);
  p.c.resize(n);
  p.e.resize(n);
  for (int i = 0; i < n; ++i) p.d[i] = p.c[i] = p.e[i] = i;
  p.m_matrix.assign((std::size_t)n * n, -1);
  for (int i = 0; i < n; ++i) p.m_matrix[(std::size_t)i * n + i] = i;
  return mk_internal_groupoid(std::move(p));
}

TEST_CASE("discrete groupoid validates") {
  auto r = discrete(G("s3"));
  CHECK(r.pairs.size() == 6);
  CHECK(is_relation(r));
  CHECK(aut_at_zero(r).group.order() == 1);
}

TEST_CASE("reflection of a discrete groupoid is discrete on I(obj)") {
  auto refl = apply_I_groupoid(discrete(G("s3")));
  CHECK(refl.g.obj.size == 2);  // I(S3) = Z2
  CHECK(refl.g.arr.size == 2);
  for (int x = 0; x < refl.g.arr.size; ++x) CHECK(refl.g.d[x] == refl.g.c[x]);
  CHECK(aut_at_zero(refl.g).group.order() == 1);
}

TEST_CASE("kernel pair groupoid sizes") {
  auto id_ext = Extension::make(Hom::identity(G("z4")));
  auto rid = kernel_pair_groupoid(id_ext);
  CHECK(rid.arr.size == 4);  // the diagonal: a discrete groupoid

  auto r = kernel_pair_groupoid(E("z4_to_z2"));
  CHECK(r.arr.size == 8);

  auto r5 = kernel_pair_groupoid(E("sl25_to_a5"));
  CHECK(r5.arr.size == 240);
}

TEST_CASE("kernel pair groupoids are relations with trivial loops") {
  // d and c are jointly monic on Eq(p), so Aut(0) is trivial before
  // reflection; the kernel shows up as Ker(d) instead
  auto p = E("z4_to_z2");
  auto r = kernel_pair_groupoid(p);
  CHECK(is_relation(r));
  CHECK(aut_at_zero(r).group.order() == 1);
  int ker_d = 0;
  for (int x = 0; x < r.arr.size; ++x)
    if (r.d[x] == 0) ++ker_d;
  CHECK(ker_d == p.kernel.order());
}

TEST_CASE("dropping a composable pair from m is an axiom violation") {
  auto eq = grp::pullback(E("q8_to_v4").hom, E("q8_to_v4").hom);
  auto p = E("q8_to_v4");
  auto good = kernel_pair_groupoid(p);
  GroupoidParts parts;
  parts.obj = good.obj;
  parts.arr = good.arr;
  parts.d = good.d;
  parts.c = good.c;
  parts.e = good.e;
  const int na = good.arr.size;
  parts.m_matrix.assign((std::size_t)na * na, -1);
  for (std::size_t i = 0; i < good.pairs.size(); ++i)
    parts.m_matrix[(std::size_t)good.pairs[i].first * na + good.pairs[i].second] = good.m[i];
  parts.m_matrix[(std::size_t)good.pairs[3].first * na + good.pairs[3].second] = -1;
  CHECK_THROWS_AS(mk_internal_groupoid(std::move(parts)), AxiomViolation);
}

TEST_CASE("corrupting m breaks unit or associativity") {
  auto p = E("z4_to_z2");
  auto good = kernel_pair_groupoid(p);
  GroupoidParts parts;
  parts.obj = good.obj;
  parts.arr = good.arr;
  parts.d = good.d;
  parts.c = good.c;
  parts.e = good.e;
  const int na = good.arr.size;
  parts.m_matrix.assign((std::size_t)na * na, -1);
  for (std::size_t i = 0; i < good.pairs.size(); ++i)
    parts.m_matrix[(std::size_t)good.pairs[i].first * na + good.pairs[i].second] = good.m[i];
  // redirect one composite to a different arrow; in a relation every other
  // arrow has wrong endpoints, so squares (2)/(3) or a unit law must fail
  auto [x, y] = good.pairs[0];
  int old = good.m[0];
  parts.m_matrix[(std::size_t)x * na + y] = (old + 1) % na;
  CHECK_THROWS_AS(mk_internal_groupoid(std::move(parts)), AxiomViolation);
}

TEST_CASE("reflection of Eq(Q8 -> V4)") {
  auto r = kernel_pair_groupoid(E("q8_to_v4"));
  auto refl = apply_I_groupoid(r);
  CHECK(refl.g.arr.size == 8);  // I of the order-16 kernel pair
  CHECK(refl.g.obj.size == 4);  // I(Q8) = V4
  auto aut = aut_at_zero(refl.g);
  CHECK(aut.group.order() == 2);
}

TEST_CASE("reflection of Eq(SL25 -> A5)") {
  auto r = kernel_pair_groupoid(E("sl25_to_a5"));
  auto refl = apply_I_groupoid(r);
  CHECK(refl.g.obj.size == 1);  // SL(2,5) is perfect
  auto aut = aut_at_zero(refl.g);
  CHECK(aut.group.order() == 2);
}

TEST_CASE("reflection of a non-normal kernel pair either validates or reports") {
  auto r = kernel_pair_groupoid(E("s3_to_z2"));
  // p is not normal, so the lemma gives no guarantee; the operation must
  // either produce a valid groupoid or throw NotAGroupoidAfterReflection
  try {
    auto refl = apply_I_groupoid(r);
    CHECK(refl.g.obj.size == 2);
    CHECK_NOTHROW(aut_at_zero(refl.g));
  } catch (const NotAGroupoidAfterReflection&) {
    CHECK(true);
  }
}

TEST_CASE("lifting of a perfect cover over the identity is unique") {
  // Hom(SL(2,5), Z2) = 0, so the only lifting of u through itself is the
  // identity
  auto u = E("sl25_to_a5");
  auto lifts = enumerate_homs(u.dom(), u.dom(), HomConstraint{u.hom, u.hom});
  REQUIRE(lifts.size() == 1);
  CHECK(lifts[0].map() == Hom::identity(u.dom()).map());
}

TEST_CASE("natural isomorphism via the pairing formula") {
  // distinct liftings of Q8 -> V4 induce functors Eq(u) -> Eq(u); the
  // <f1,g1> construction finds mu
  auto u = E("q8_to_v4");
  auto lifts = enumerate_homs(u.dom(), u.dom(), HomConstraint{u.hom, u.hom});
  REQUIRE(lifts.size() >= 2);
  auto r = kernel_pair_groupoid(u);
  auto mk_functor = [&](const Hom& h) {
    InternalFunctor f;
    f.f0 = h.map();
    f.f1.resize(r.arr.size);
    auto eq = grp::pullback(u.hom, u.hom);
    for (int i = 0; i < r.arr.size; ++i) {
      auto [x, y] = eq.pairs[i];
      f.f1[i] = eq.pair_index(h(x), h(y));
      REQUIRE(f.f1[i] >= 0);
    }
    return f;
  };
  auto f = mk_functor(lifts[0]);
  auto g = mk_functor(lifts[1]);
  auto mu = are_naturally_isomorphic(r, r, f, g);
  REQUIRE(mu.has_value());
  CHECK(validate_nat_trans(r, r, f, g, mu->mu));

  // identity case: mu = e . f0
  auto same = are_naturally_isomorphic(r, r, f, f);
  REQUIRE(same.has_value());
  for (int o = 0; o < r.obj.size; ++o) CHECK(same->mu[o] == r.e[f.f0[o]]);
}

TEST_CASE("functors with different object maps into a discrete groupoid") {
  auto z2 = G("z2");
  auto dz2 = discrete(G("v4"));
  auto rz2 = discrete(z2);
  InternalFunctor f{{0, 1}, {0, 1}};
  InternalFunctor g{{0, 2}, {0, 2}};
  CHECK_FALSE(are_naturally_isomorphic(rz2, dz2, f, g).has_value());
}

TEST_CASE("naturally isomorphic functors induce the same map on Aut(0)") {
  auto u = E("q8_to_v4");
  auto r = kernel_pair_groupoid(u);
  auto refl = apply_I_groupoid(r);
  auto lifts = enumerate_homs(u.dom(), u.dom(), HomConstraint{u.hom, u.hom});
  REQUIRE(lifts.size() >= 2);
  auto eq = grp::pullback(u.hom, u.hom);
  auto aut = aut_at_zero(refl.g);
  std::vector<Hom> induced;
  for (const auto& h : lifts) {
    InternalFunctor rf;
    rf.f0.resize(refl.g.obj.size, -1);
    rf.f1.resize(refl.g.arr.size, -1);
    for (int x = 0; x < r.obj.size; ++x) rf.f0[refl.eta_obj(x)] = refl.eta_obj(h(x));
    for (int i = 0; i < r.arr.size; ++i) {
      auto [x, y] = eq.pairs[i];
      rf.f1[refl.eta_arr(i)] = refl.eta_arr(eq.pair_index(h(x), h(y)));
    }
    validate_functor(refl.g, refl.g, rf);
    induced.push_back(induced_map_on_aut(rf, refl.g, refl.g, aut, aut));
  }
  for (std::size_t i = 1; i < induced.size(); ++i)
    CHECK(induced[i].map() == induced[0].map());
  // identity functor restricts to the identity
  InternalFunctor idf;
  idf.f0.resize(refl.g.obj.size);
  idf.f1.resize(refl.g.arr.size);
  for (int o = 0; o < refl.g.obj.size; ++o) idf.f0[o] = o;
  for (int x = 0; x < refl.g.arr.size; ++x) idf.f1[x] = x;
  CHECK(induced_map_on_aut(idf, refl.g, refl.g, aut, aut).map() ==
        Hom::identity(aut.group).map());
}

TEST_CASE("swap-conjugation functor on Eq(Q8 -> V4) induces identity on Aut(0)") {
  auto p = E("q8_to_v4");
  auto r = kernel_pair_groupoid(p);
  auto refl = apply_I_groupoid(r);
  auto eq = grp::pullback(p.hom, p.hom);
  // the swap functor (x,y) -> (y,x) covers the identity only after composing
  // with itself; instead use conjugation by s: functor from the lifting pair
  // (identity, identity) is trivial, so use two distinct liftings as above
  auto lifts = enumerate_homs(p.dom(), p.dom(), HomConstraint{p.hom, p.hom});
  REQUIRE(lifts.size() >= 2);
  auto aut = aut_at_zero(refl.g);
  for (const auto& h : lifts) {
    InternalFunctor rf;
    rf.f0.resize(refl.g.obj.size, -1);
    rf.f1.resize(refl.g.arr.size, -1);
    for (int x = 0; x < r.obj.size; ++x) rf.f0[refl.eta_obj(x)] = refl.eta_obj(h(x));
    for (int i = 0; i < r.arr.size; ++i) {
      auto [x, y] = eq.pairs[i];
      rf.f1[refl.eta_arr(i)] = refl.eta_arr(eq.pair_index(h(x), h(y)));
    }
    auto ind = induced_map_on_aut(rf, refl.g, refl.g, aut, aut);
    CHECK(ind.map() == Hom::identity(aut.group).map());
  }
}
