#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catgal/galois.hpp"
#include "catgal/structure.hpp"
#include "support.hpp"

using namespace catgal;
using namespace catgal::grp;
using namespace catgal::gal;
using testsup::E;
using testsup::G;

static Extension id_ext(const Group& g) { return Extension::make(Hom::identity(g)); }

static std::vector<Extension> a5_family() {
  auto a5 = G("a5");
  auto u = E("sl25_to_a5");
  std::vector<Extension> fam = {id_ext(a5), u};
  for (const char* n : {"z2", "z3"}) {
    auto pr = product(a5, G(n));
    fam.push_back(Extension::make(pr.p1, "a5x" + std::string(n) + "->a5"));
  }
  auto pr = product(u.dom(), G("z2"));
  fam.push_back(Extension::make(Hom::compose(u.hom, pr.p1), "sl25xz2->a5"));
  return fam;
}

TEST_CASE("galois group of simple extensions") {
  auto z2 = G("z2");
  auto gid = galois_group(id_ext(z2));
  CHECK(gid.via_intersection.order() == 1);

  auto g1 = galois_group(E("q8_to_v4"));
  CHECK(g1.via_intersection.order() == 2);
  CHECK(g1.via_groupoid.order() == 2);
  CHECK(g1.comparison.bijective());

  auto g2 = galois_group(E("z4_to_z2"));
  CHECK(g2.via_intersection.order() == 1);

  CHECK_THROWS_AS(galois_group(E("s3_to_z2")), NotNormal);

  auto g3 = galois_group(E("sl25_to_a5"));
  CHECK(g3.via_intersection.order() == 2);
}

TEST_CASE("two-path agreement on every normal fixture extension") {
  for (const char* n : {"z4_to_z2", "z6_to_z2", "z6_to_z3", "v4_to_z2", "q8_to_v4",
                        "d4_to_v4", "sl23_to_a4", "sl25_to_a5", "a5xz2_to_a5",
                        "sl25xz2_to_a5", "v4xz2_to_v4", "d4xz2_to_v4"}) {
    auto p = E(n);
    REQUIRE(structure::is_normal_extension(p));
    auto g = galois_group(p);
    CHECK(g.comparison.bijective());
    CHECK(g.via_intersection.order() == g.via_groupoid.order());
  }
}

TEST_CASE("gal_on_morphism") {
  auto p = E("q8_to_v4");
  auto gp = galois_group(p);

  // identity morphism induces the identity
  auto idm = gal_on_morphism(p, p, {Hom::identity(p.dom()), Hom::identity(p.cod())}, gp, gp);
  CHECK(idm.map() == Hom::identity(gp.via_intersection).map());

  // collapse onto the identity extension of the codomain: zero map
  auto q = id_ext(p.cod());
  auto gq = galois_group(q);
  auto z = gal_on_morphism(p, q, {p.hom, Hom::identity(p.cod())}, gp, gq);
  CHECK(z.cod().order() == 1);

  // non-commuting square is rejected
  auto v4 = G("v4");
  Hom swap = Hom::make(v4, v4, {0, 2, 1, 3});
  CHECK_THROWS_AS(gal_on_morphism(p, p, {Hom::identity(p.dom()), swap}, gp, gp),
                  SquareDoesNotCommute);
}

TEST_CASE("gal_on_morphism along the A4 inclusion") {
  auto u = E("sl25_to_a5");
  auto incl = testsup::H("a4_into_a5");
  auto pb = grp::pullback(incl, u.hom);
  auto pulled = Extension::make(pb.p1, "a4*(sl25_to_a5)");
  auto gP = galois_group(pulled);
  auto gu = galois_group(u);
  CHECK(gP.via_intersection.order() == 2);
  auto ind = gal_on_morphism(pulled, u, {pb.p2, incl}, gP, gu);
  CHECK(ind.injective());
}

TEST_CASE("baer invariance") {
  auto z2 = G("z2");
  auto rid = baer_check(id_ext(z2), id_ext(z2), Hom::identity(z2));
  CHECK(rid.maps_tested == 1);
  CHECK(rid.distinct_induced == 1);

  auto rq8 = baer_check(E("q8_to_v4"), E("q8_to_v4"), Hom::identity(G("v4")));
  CHECK(rq8.maps_tested == 4);
  CHECK(rq8.distinct_induced == 1);
  CHECK(rq8.induced.map() == std::vector<int>{0, 1});

  auto ra5 = baer_check(E("sl25_to_a5"), E("sl25_to_a5"), Hom::identity(G("a5")));
  CHECK(ra5.maps_tested == 1);
  CHECK(ra5.distinct_induced == 1);
}

TEST_CASE("weak universality certificates") {
  auto u = E("sl25_to_a5");
  // family = {u}: the identity lifting
  auto small = verify_weakly_universal(u, {u});
  CHECK(small.liftings.size() == 1);
  CHECK(small.liftings[0].map() == Hom::identity(u.dom()).map());
  CHECK(small.stem);

  auto cert = verify_weakly_universal(u, a5_family());
  CHECK(cert.family.size() == 5);

  // the identity on A5 is not weakly universal against {u}
  CHECK_THROWS_AS(verify_weakly_universal(id_ext(G("a5")), {u}), NoLifting);

  // D4 -> V4 certifies against its declared family but not against one
  // containing Q8 -> V4
  auto d4v4 = E("d4_to_v4");
  auto fam_ok = std::vector<Extension>{id_ext(G("v4")), d4v4};
  CHECK_NOTHROW(verify_weakly_universal(d4v4, fam_ok));
  CHECK_THROWS_AS(verify_weakly_universal(d4v4, {E("q8_to_v4")}), NoLifting);
}

TEST_CASE("pi1 objects") {
  // abelian base with the identity cover: trivial pi1
  auto z2 = G("z2");
  auto certz2 = verify_weakly_universal(id_ext(z2), {id_ext(z2)});
  CHECK(pi1_object(certz2).group.order() == 1);

  auto cert = verify_weakly_universal(E("sl25_to_a5"), a5_family());
  auto pi1 = pi1_object(cert);
  CHECK(abelian_invariants(pi1.group) == std::vector<long long>{2});
  CHECK(pi1.stem);

  // V4 with the D4 stem cover, relative to its family
  auto d4v4 = E("d4_to_v4");
  auto certv4 = verify_weakly_universal(d4v4, {id_ext(G("v4")), d4v4});
  auto pv4 = pi1_object(certv4);
  CHECK(abelian_invariants(pv4.group) == std::vector<long long>{2});
  CHECK(pv4.stem);
}

TEST_CASE("pi1 independence across mutually liftable covers") {
  auto u1 = E("sl25_to_a5");
  auto fam = a5_family();
  auto c1 = verify_weakly_universal(u1, fam);
  auto u2 = fam[4];  // sl25 x z2 -> a5
  auto c2 = verify_weakly_universal(u2, fam);
  auto p1 = pi1_object(c1);
  auto p2 = pi1_object(c2);
  CHECK(abelian_invariants(p1.group) == abelian_invariants(p2.group));
  // all morphisms u2 -> u1 over the identity induce one map (Baer)
  auto rep = baer_check(u2, u1, Hom::identity(G("a5")));
  CHECK(rep.maps_tested >= 1);
  CHECK(rep.distinct_induced == 1);
}

TEST_CASE("pi1_morphism identity and constant maps") {
  auto cert = verify_weakly_universal(E("sl25_to_a5"), a5_family());
  auto gal_u = pi1_object(cert).gal;
  auto ida5 = pi1_morphism(Hom::identity(G("a5")), cert, cert, gal_u, gal_u);
  CHECK(ida5.map() == Hom::identity(gal_u.via_intersection).map());

  Group one = Group::trusted("1", {0}, 1);
  auto cert1 = verify_weakly_universal(id_ext(one), {id_ext(one)});
  auto gal1 = pi1_object(cert1).gal;
  auto to1 = Hom::make(G("a5"), one, std::vector<int>(60, 0));
  auto z = pi1_morphism(to1, cert, cert1, gal_u, gal1);
  CHECK(z.cod().order() == 1);
}

TEST_CASE("pi1 functoriality along V4 -> A4 -> A5") {
  auto q8v4 = E("q8_to_v4");
  auto sl23a4 = E("sl23_to_a4");
  auto sl25a5 = E("sl25_to_a5");
  auto iv4a4 = testsup::H("v4_into_a4");
  auto ia4a5 = testsup::H("a4_into_a5");

  // certificates whose families include the relevant pullbacks
  auto pb_v4 = grp::pullback(iv4a4, sl23a4.hom);
  auto pulled_v4 = Extension::make(pb_v4.p1, "v4*(sl23_to_a4)");
  auto cert_v4 = verify_weakly_universal(q8v4, {id_ext(G("v4")), q8v4, pulled_v4});
  auto pb_a4 = grp::pullback(ia4a5, sl25a5.hom);
  auto pulled_a4 = Extension::make(pb_a4.p1, "a4*(sl25_to_a5)");
  auto cert_a4 = verify_weakly_universal(sl23a4, {id_ext(G("a4")), sl23a4, pulled_a4});
  auto cert_a5 = verify_weakly_universal(sl25a5, a5_family());

  auto g_v4 = pi1_object(cert_v4).gal;
  auto g_a4 = pi1_object(cert_a4).gal;
  auto g_a5 = pi1_object(cert_a5).gal;
  CHECK(g_v4.via_intersection.order() == 2);
  CHECK(g_a4.via_intersection.order() == 2);

  auto f1 = pi1_morphism(iv4a4, cert_v4, cert_a4, g_v4, g_a4);
  auto f2 = pi1_morphism(ia4a5, cert_a4, cert_a5, g_a4, g_a5);
  CHECK(f1.injective());
  CHECK(f2.injective());

  auto comp = Hom::compose(ia4a5, iv4a4);
  auto pb_direct = grp::pullback(comp, sl25a5.hom);
  auto pulled_direct = Extension::make(pb_direct.p1, "v4*(sl25_to_a5)");
  auto cert_v4b = verify_weakly_universal(q8v4, {id_ext(G("v4")), q8v4, pulled_direct});
  auto f12 = pi1_morphism(comp, cert_v4b, cert_a5, g_v4, g_a5);
  CHECK(f12.map() == Hom::compose(f2, f1).map());
}

TEST_CASE("kappa components") {
  auto cert = verify_weakly_universal(E("sl25_to_a5"), a5_family());
  auto gal_u = pi1_object(cert).gal;

  // kappa_u is an isomorphism
  auto ku = kappa(cert.u, cert, gal_u, gal_u);
  CHECK(ku.bijective());

  // trivial covering: Gal is trivial, kappa the unique map
  auto triv = cert.family[2];
  auto gal_t = galois_group(triv);
  CHECK(gal_t.via_intersection.order() == 1);
  auto kt = kappa(triv, cert, gal_t, gal_u);
  CHECK(kt.cod().order() == 1);

  // pullback of u along the identity: kappa is an isomorphism
  auto pb = grp::pullback(Hom::identity(G("a5")), cert.u.hom);
  auto pulled = Extension::make(pb.p1, "id*(u)");
  auto gal_p = galois_group(pulled);
  auto kp = kappa(pulled, cert, gal_p, gal_u);
  CHECK(kp.bijective());

  // central non-stem member: kappa is an isomorphism onto its Gal
  auto cent = cert.family[4];
  auto gal_c = galois_group(cent);
  CHECK(gal_c.via_intersection.order() == 2);
  auto kc = kappa(cent, cert, gal_c, gal_u);
  CHECK(kc.bijective());
  CHECK(kappa(cent, cert, gal_c, gal_u, true).map() == kc.map());

  // no lifting: D4 cover cannot reach Q8 -> V4
  auto d4v4 = E("d4_to_v4");
  auto certv4 = verify_weakly_universal(d4v4, {id_ext(G("v4")), d4v4});
  auto galq8 = galois_group(E("q8_to_v4"));
  auto galuv4 = galois_group(d4v4);
  CHECK_THROWS_AS(kappa(E("q8_to_v4"), certv4, galq8, galuv4), NoLifting);
}

TEST_CASE("pi1_morphism reports NoLifting for an insufficient certificate") {
  // along V4 -> A4 the pullback of the SL(2,3) cover is a Q8 cover of V4,
  // which the D4 cover cannot reach
  auto d4v4 = E("d4_to_v4");
  auto cert_v4 = verify_weakly_universal(d4v4, {id_ext(G("v4")), d4v4});
  auto sl23a4 = E("sl23_to_a4");
  auto cert_a4 = verify_weakly_universal(sl23a4, {id_ext(G("a4")), sl23a4});
  auto g_v4 = pi1_object(cert_v4).gal;
  auto g_a4 = pi1_object(cert_a4).gal;
  CHECK_THROWS_AS(pi1_morphism(testsup::H("v4_into_a4"), cert_v4, cert_a4, g_v4, g_a4),
                  NoLifting);
}

TEST_CASE("kappa naturality across a base morphism") {
  // square (proj, incl): a4*(u) -> u; Gal((proj,incl)) . kappa_pulled =
  // kappa_u . pi1(incl)
  auto u = E("sl25_to_a5");
  auto cert_a5 = verify_weakly_universal(u, a5_family());
  auto g_a5 = pi1_object(cert_a5).gal;

  auto incl = testsup::H("a4_into_a5");
  auto pb = grp::pullback(incl, u.hom);
  auto pulled = Extension::make(pb.p1, "a4*(u)");
  auto sl23a4 = E("sl23_to_a4");
  auto cert_a4 = verify_weakly_universal(sl23a4, {id_ext(G("a4")), sl23a4, pulled});
  auto g_a4 = pi1_object(cert_a4).gal;

  auto gal_pulled = galois_group(pulled);
  auto k_pulled = kappa(pulled, cert_a4, gal_pulled, g_a4);
  auto k_u = kappa(u, cert_a5, g_a5, g_a5);
  auto gal_sq = gal_on_morphism(pulled, u, {pb.p2, incl}, gal_pulled, g_a5);
  auto pi1_incl = pi1_morphism(incl, cert_a4, cert_a5, g_a4, g_a5);
  for (int x = 0; x < g_a4.via_intersection.order(); ++x)
    CHECK(gal_sq(k_pulled(x)) == k_u(pi1_incl(x)));
}
