// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "catgal/galois.hpp"
#include "catgal/graph.hpp"
#include "catgal/homology.hpp"
#include "catgal/kan.hpp"
#include "catgal/structure.hpp"
#include "oracle_cocycle.hpp"
#include "support.hpp"

using namespace catgal;
using namespace catgal::grp;
using Clock = std::chrono::steady_clock;

static int failures = 0;

static double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

static void criterion(int n, const std::string& what, bool ok, const std::string& detail) {
  std::printf("[%s] %2d. %s%s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(),
              detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

static std::vector<Group> corpus24() {
  std::vector<Group> out;
  for (const char* n : {"z2", "z3", "z4", "z6", "z12", "v4", "z2z4", "z2cube", "s3", "d4",
                        "q8", "dic3", "a4", "sl23", "v4xz2", "d4xz2"})
    out.push_back(testsup::G(n));
  return out;
}

static std::vector<Extension> all_surjections(const std::vector<Group>& gs) {
  std::vector<Extension> out;
  for (const auto& a : gs)
    for (const auto& b : gs) {
      if (a.order() % b.order() != 0) continue;
      for (const auto& h : enumerate_homs(a, b))
        if (h.surjective())
          out.push_back(Extension::make(h, a.name() + "->" + b.name()));
    }
  return out;
}

static Extension id_ext(const Group& g) {
  return Extension::make(Hom::identity(g), "id_" + g.name());
}

static std::vector<Extension> a5_family(const Extension& u) {
  auto a5 = u.cod();
  std::vector<Extension> fam = {id_ext(a5), u};
  for (const char* n : {"z2", "z3"}) {
    auto pr = product(a5, testsup::G(n));
    fam.push_back(Extension::make(pr.p1, "a5x" + std::string(n) + "->a5"));
  }
  auto pr = product(u.dom(), testsup::G("z2"));
  fam.push_back(Extension::make(Hom::compose(u.hom, pr.p1), "sl25xz2->a5"));
  return fam;
}

int main() {
  // 1. coincidence of central and normal over the order-<=24 corpus
  std::vector<Extension> corpus;
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    try {
      corpus = all_surjections(corpus24());
      int mismatches = 0;
      for (const auto& p : corpus)
        if (structure::is_central(p) != structure::is_normal_extension(p)) ++mismatches;
      double dt = seconds_since(t0);
      ok = corpus.size() >= 200 && mismatches == 0 && dt < 60.0;
      detail = std::to_string(corpus.size()) + " surjections, " + std::to_string(mismatches) +
               " mismatches, " + std::to_string(dt).substr(0, 5) + " s";
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    criterion(1, "central == normal on every fixture surjection of order <= 24", ok, detail);
  }

  // 2. two-path Galois group agreement on every normal extension of the corpus
  {
    bool ok = true;
    std::string detail;
    int normal_count = 0;
    try {
      for (const auto& p : corpus)
        if (structure::is_normal_extension(p)) {
          ++normal_count;
          auto g = gal::galois_group(p);  // throws ComparisonFailure on any defect
          if (!g.comparison.bijective()) throw ComparisonFailure(p.name);
        }
      detail = std::to_string(normal_count) + " normal extensions, zero comparison failures";
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    criterion(2, "groupoid and intersection routes agree on every normal extension", ok, detail);
  }

  // 3. Baer invariance with exhaustive lifting enumeration
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    try {
      auto rq8 = gal::baer_check(testsup::E("q8_to_v4"), testsup::E("q8_to_v4"),
                                 Hom::identity(testsup::G("v4")));
      auto ra5 = gal::baer_check(testsup::E("sl25_to_a5"), testsup::E("sl25_to_a5"),
                                 Hom::identity(testsup::G("a5")));
      double dt = seconds_since(t0);
      ok = rq8.maps_tested >= 1 && rq8.distinct_induced == 1 && ra5.maps_tested >= 1 &&
           ra5.distinct_induced == 1 && dt < 120.0;
      detail = "Q8->V4: " + std::to_string(rq8.maps_tested) + " liftings/1 induced; SL25->A5: " +
               std::to_string(ra5.maps_tested) + " liftings/1 induced; " +
               std::to_string(dt).substr(0, 5) + " s";
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    criterion(3, "Baer invariance: one induced Galois map per extension", ok, detail);
  }

  // 4. pi1(A5) = H2(A5) = Z/2 (slow: sparse homology of an order-60 group)
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    try {
      auto u = testsup::E("sl25_to_a5");
      auto cert = gal::verify_weakly_universal(u, a5_family(u));
      auto pi1 = gal::pi1_object(cert);
      auto inv = abelian_invariants(pi1.group);
      auto h2 = homology::h2_sparse(testsup::G("a5"));
      double dt = seconds_since(t0);
      bool local_ok = h2.local_exponents.at(2) == std::vector<int>{1} &&
                      h2.local_exponents.at(3).empty() && h2.local_exponents.at(5).empty();
      ok = cert.family.size() >= 5 && inv == std::vector<long long>{2} &&
           h2.invariants == std::vector<long long>{2} && local_ok && h2.z_rank == 0 &&
           inv == h2.invariants && dt < 600.0;
      detail = "pi1 = [2], H2 local factors [2], family of " +
               std::to_string(cert.family.size()) + ", " + std::to_string(dt).substr(0, 6) + " s";
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    criterion(4, "pi1(A5) equals H2(A5) through the homology oracle", ok, detail);
  }

  // 5. homology oracle cross-validation
  {
    bool ok = true;
    std::string detail = "H1 on 11 fixtures, H2 vs cocycle oracle on order <= 8";
    try {
      for (const char* n : {"z2", "z3", "z4", "z6", "v4", "s3", "d4", "q8", "a4", "a5", "sl25"}) {
        auto g = testsup::G(n);
        if (homology::homology(g, 1) != abelian_invariants(abelianization(g).group)) {
          ok = false;
          detail = std::string("H1 mismatch for ") + n;
        }
      }
      for (const char* n : {"z2", "z3", "z4", "z6", "v4", "s3", "d4", "q8"}) {
        auto g = testsup::G(n);
        if (homology::homology(g, 2) != oracle::h2_invariants(g)) {
          ok = false;
          detail = std::string("H2 mismatch for ") + n;
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    criterion(5, "H1 == abelianization and H2 == 2-cocycle oracle", ok, detail);
  }

  // 6. Kan verification of the shipped and mutated scenarios
  {
    bool ok = true;
    std::string detail;
    try {
      auto sa = kan::load_scenario(testsup::scenario("a5_kan.json"));
      auto va = kan::check_kappa_kan(sa);
      auto sv = kan::load_scenario(testsup::scenario("v4_kan.json"));
      auto vv = kan::check_kappa_kan(sv);
      auto sm = kan::load_scenario(testsup::scenario("mutated/a5_kan_mutated.json"));
      auto vm = kan::check_kappa_kan(sm);
      bool witness_named = !vm.witnesses.empty() &&
                           vm.witnesses[0].find("p_cent") != std::string::npos &&
                           vm.witnesses[0].find("(h,1_B)") != std::string::npos;
      ok = va.factorization_ok && va.uniqueness_ok && vv.factorization_ok && vv.uniqueness_ok &&
           !vm.factorization_ok && witness_named;
      detail = ok ? "a5 and v4 verdicts pass; mutated fails on the named square"
                  : "unexpected verdicts";
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    criterion(6, "Kan verdicts: shipped scenarios pass, mutated fails with witness", ok, detail);
  }

  // 7. iota-factorization on every kernel-valued scenario that loads
  {
    bool ok = true;
    std::string detail;
    try {
      auto s = kan::load_scenario(testsup::scenario("a5_ker.json"));
      auto rep = kan::check_iota_factorization(s);
      bool escape_rejected = false;
      try {
        kan::load_scenario(testsup::scenario("mutated/z2_ker_escape.json"));
      } catch (const NaturalityViolation&) {
        escape_rejected = true;
      }
      ok = rep.ok && rep.witnesses.empty() && rep.lifted.size() == s.exts.size() &&
           escape_rejected;
      detail = ok ? "zero violations; escaping gamma rejected at naturality validation"
                  : "violation or escape fixture accepted";
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    criterion(7, "eta.ker.gamma = 0 for every naturality-validated kernel scenario", ok, detail);
  }

  // 8. reflection Kan component on the non-central fixtures
  {
    bool ok = true;
    std::string detail = "s3_to_z2, a4_to_z3, dic3_to_z4, a5xs3->a5";
    try {
      auto check_one = [&](const Extension& p, const gal::WeaklyUniversalCert& cert) {
        auto via = kan::kan_via_reflection(p, cert);
        auto direct = kan::delta_component(structure::central_reflection(p).reflected, cert);
        if (via.map() != direct.map()) {
          ok = false;
          detail = "mismatch at " + p.name;
        }
      };
      auto mk_cert = [&](const Group& base) {
        std::vector<Extension> fam = {id_ext(base)};
        for (const char* n : {"z2", "z3"}) {
          auto pr = product(base, testsup::G(n));
          fam.push_back(Extension::make(pr.p1, base.name() + "x" + n));
        }
        return gal::verify_weakly_universal(id_ext(base), fam);
      };
      check_one(testsup::E("s3_to_z2"), mk_cert(testsup::G("z2")));
      check_one(testsup::E("a4_to_z3"), mk_cert(testsup::G("z3")));
      check_one(testsup::E("dic3_to_z4"), mk_cert(testsup::G("z4")));
      // non-central kernel over A5
      auto a5 = testsup::G("a5");
      auto p = Extension::make(product(a5, testsup::G("s3")).p1, "a5xs3->a5");
      if (structure::is_central(p)) {
        ok = false;
        detail = "a5xs3 fixture unexpectedly central";
      }
      auto u = testsup::E("sl25_to_a5");
      std::vector<Extension> fam = {id_ext(a5), u,
                                    structure::central_reflection(p).reflected};
      check_one(p, gal::verify_weakly_universal(u, fam));
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    criterion(8, "kan_via_reflection equals delta of the central reflection", ok, detail);
  }

  // 9. graph exact sequences with the Nielsen-Schreier ranks
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    try {
      auto r1 = graph::exact_sequence_check(
          graph::load_cover(testsup::fixture("graphs/c6_to_c3.json")), 8);
      auto r2 = graph::exact_sequence_check(
          graph::load_cover(testsup::fixture("graphs/fig8_double_cover.json")), 8);
      auto r3 = graph::exact_sequence_check(
          graph::load_cover(testsup::fixture("graphs/c3disj_to_c3.json")), 8);
      double dt = seconds_since(t0);
      ok = r1.all() && r2.all() && r3.all() && r1.rank_total == 1 && r2.rank_total == 3 &&
           dt < 10.0;
      detail = "ranks " + std::to_string(r1.rank_total) + "/" + std::to_string(r2.rank_total) +
               ", all five positions, " + std::to_string(dt).substr(0, 5) + " s";
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    criterion(9, "exact homotopy sequence on the three covering fixtures at L=8", ok, detail);
  }

  // 10. deck/Galois agreement and the irregular fixture
  {
    bool ok = true;
    std::string detail;
    try {
      auto g1 = graph::graph_galois_group(
          graph::load_cover(testsup::fixture("graphs/c6_to_c3.json")));
      auto g2 = graph::graph_galois_group(
          graph::load_cover(testsup::fixture("graphs/fig8_double_cover.json")));
      auto irr = graph::load_cover(testsup::fixture("graphs/fig8_irr3_cover.json"));
      auto deck = graph::deck_group(irr);
      bool irr_rejected = false;
      try {
        graph::graph_galois_group(irr);
      } catch (const NotNormalCover&) {
        irr_rejected = true;
      }
      ok = g1.group.order() == g1.deck_order && g2.group.order() == g2.deck_order &&
           g1.group.order() == 2 && g2.group.order() == 2 && irr_rejected &&
           deck.group.order() == 1 && !deck.regular;
      detail = "regular fixtures agree at order 2; irregular: trivial deck, not regular";
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    criterion(10, "graph Galois group equals the deck group on regular fixtures", ok, detail);
  }

  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
