#include "catgal/galois.hpp"

#include <algorithm>

#include "catgal/structure.hpp"

namespace catgal::gal {

using namespace grp;
using gpd::apply_I_groupoid;
using gpd::aut_at_zero;
using gpd::kernel_pair_groupoid_data;

GaloisGroupResult galois_group(const Extension& p) {
  if (!structure::is_normal_extension(p)) throw NotNormal(p.name);

  auto kp = kernel_pair_groupoid_data(p);
  auto refl = apply_I_groupoid(kp.g);
  auto aut = aut_at_zero(refl.g);

  Subgroup carrier = intersect(p.kernel, derived_subgroup(p.dom()));
  Group via_int = subgroup_as_group(carrier, "Gal(" + p.name + ",0)");

  // canonical comparison k |-> class of the arrow (0, k)
  std::vector<Elt> cmp(carrier.order());
  for (int i = 0; i < carrier.order(); ++i) {
    int arrow = kp.eq.pair_index(0, carrier.elems[i]);
    if (arrow < 0) throw ComparisonFailure(p.name + ": (0,k) not in Eq(p)");
    int elt = aut.arrow_to_elt(refl.eta_arr(arrow));
    if (elt < 0) throw ComparisonFailure(p.name + ": [(0,k)] is not a loop at 0");
    cmp[i] = elt;
  }
  Hom comparison;
  try {
    comparison = Hom::make(via_int, aut.group, std::move(cmp));
  } catch (const NotAHom& e) {
    throw ComparisonFailure(p.name + ": comparison not a hom: " + e.what());
  }
  if (!comparison.bijective()) throw ComparisonFailure(p.name + ": comparison not bijective");
  return {aut.group, via_int, std::move(carrier), std::move(comparison)};
}

void validate_square(const Extension& p, const Extension& q, const ExtMorphism& m) {
  if (!m.f.dom().same_table(p.dom()) || !m.f.cod().same_table(q.dom()) ||
      !m.b.dom().same_table(p.cod()) || !m.b.cod().same_table(q.cod()))
    throw SquareDoesNotCommute("morphism endpoints do not match the extensions");
  for (Elt x = 0; x < p.dom().order(); ++x)
    if (m.b(p.hom(x)) != q.hom(m.f(x)))
      throw SquareDoesNotCommute("at element " + std::to_string(x));
}

gpd::InternalFunctor reflected_kp_functor(const gpd::KernelPairData& rp,
                                          const gpd::ReflectedGroupoid& reflp,
                                          const gpd::KernelPairData& rq,
                                          const gpd::ReflectedGroupoid& reflq, const Hom& f) {
  gpd::InternalFunctor rf;
  rf.f0.assign(reflp.g.obj.size, -1);
  rf.f1.assign(reflp.g.arr.size, -1);
  for (int x = 0; x < rp.g.obj.size; ++x) {
    int& slot = rf.f0[reflp.eta_obj(x)];
    int val = reflq.eta_obj(f(x));
    if (slot >= 0 && slot != val) throw ComparisonFailure("reflected f0 ill-defined");
    slot = val;
  }
  for (int i = 0; i < rp.g.arr.size; ++i) {
    auto [x, y] = rp.eq.pairs[i];
    int j = rq.eq.pair_index(f(x), f(y));
    if (j < 0) throw SquareDoesNotCommute("image pair leaves Eq");
    int& slot = rf.f1[reflp.eta_arr(i)];
    int val = reflq.eta_arr(j);
    if (slot >= 0 && slot != val) throw ComparisonFailure("reflected f1 ill-defined");
    slot = val;
  }
  return rf;
}

Hom gal_on_morphism(const Extension& p, const Extension& q, const ExtMorphism& m,
                    const GaloisGroupResult& gp, const GaloisGroupResult& gq,
                    bool check_groupoid_route) {
  validate_square(p, q, m);
  Hom via_int = restrict_hom(m.f, gp.carrier, gp.via_intersection, gq.carrier,
                             gq.via_intersection);
  if (check_groupoid_route) {
    auto rp = kernel_pair_groupoid_data(p);
    auto reflp = apply_I_groupoid(rp.g);
    auto rq = kernel_pair_groupoid_data(q);
    auto reflq = apply_I_groupoid(rq.g);
    auto autp = aut_at_zero(reflp.g);
    auto autq = aut_at_zero(reflq.g);
    auto rf = reflected_kp_functor(rp, reflp, rq, reflq, m.f);
    gpd::validate_functor(reflp.g, reflq.g, rf);
    Hom via_gpd = gpd::induced_map_on_aut(rf, reflp.g, reflq.g, autp, autq);
    // the freshly computed aut groups may be the same tables as gp/gq's
    // groupoid-route groups; compare through the comparisons
    for (int i = 0; i < gp.via_intersection.order(); ++i) {
      int lhs = gq.comparison(via_int(i));
      int rhs = via_gpd(gp.comparison(i));
      if (lhs != rhs) throw ComparisonFailure("gal_on_morphism: routes disagree");
    }
  }
  return via_int;
}

BaerReport baer_check(const Extension& p, const Extension& q, const Hom& b,
                      std::int64_t budget) {
  auto gp = galois_group(p);
  auto gq = galois_group(q);
  Hom target = Hom::compose(b, p.hom);
  auto lifts = enumerate_homs(p.dom(), q.dom(), HomConstraint{q.hom, target}, budget);
  BaerReport rep;
  rep.maps_tested = (std::int64_t)lifts.size();
  std::vector<std::vector<Elt>> seen;
  for (const auto& f : lifts) {
    Hom ind = gal_on_morphism(p, q, ExtMorphism{f, b}, gp, gq, false);
    if (std::find(seen.begin(), seen.end(), ind.map()) == seen.end()) {
      seen.push_back(ind.map());
      rep.induced = ind;
    }
  }
  rep.distinct_induced = (int)seen.size();
  return rep;
}

WeaklyUniversalCert verify_weakly_universal(const Extension& u,
                                            const std::vector<Extension>& family) {
  if (!structure::is_normal_extension(u)) throw NotNormal(u.name);
  WeaklyUniversalCert cert;
  cert.u = u;
  for (const auto& p : family) {
    if (!p.cod().same_table(u.cod()))
      throw CodMismatch("family member " + p.name + " has a different codomain");
    if (!structure::is_normal_extension(p)) throw NotNormal(p.name);
    auto lifts = enumerate_homs(u.dom(), p.dom(), HomConstraint{p.hom, u.hom});
    if (lifts.empty()) throw NoLifting(u.name + " does not lift through " + p.name);
    cert.family.push_back(p);
    cert.liftings.push_back(lifts.front());
  }
  auto z = center(u.dom());
  auto comm = derived_subgroup(u.dom());
  cert.stem = true;
  for (Elt k : u.kernel.elems)
    if (!z.contains(k) || !comm.contains(k)) {
      cert.stem = false;
      break;
    }
  return cert;
}

Pi1Result pi1_object(const WeaklyUniversalCert& cert) {
  if (cert.u.hom.map().empty()) throw MissingCertificate("pi1_object");
  auto gal = galois_group(cert.u);
  Group g = gal.via_intersection;
  return {std::move(g), std::move(gal), cert.stem};
}

Hom pi1_morphism(const Hom& f, const WeaklyUniversalCert& ua, const WeaklyUniversalCert& ub,
                 const GaloisGroupResult& gal_ua, const GaloisGroupResult& gal_ub) {
  if (!f.dom().same_table(ua.u.cod()) || !f.cod().same_table(ub.u.cod()))
    throw CodMismatch("pi1_morphism: f does not match the certified bases");
  auto pb = grp::pullback(f, ub.u.hom);  // p1: P -> A (the pulled-back cover)
  Extension pulled = Extension::make(pb.p1, f.dom().name() + "*(" + ub.u.name + ")");
  auto lifts = enumerate_homs(ua.u.dom(), pulled.dom(), HomConstraint{pulled.hom, ua.u.hom});
  if (lifts.empty()) throw NoLifting("pi1_morphism: " + ua.u.name + " through the pullback");
  std::vector<std::vector<Elt>> seen;
  Hom result;
  for (const auto& l : lifts) {
    Hom g = Hom::compose(pb.p2, l);  // U_A -> U_B over f
    Hom ind = restrict_hom(g, gal_ua.carrier, gal_ua.via_intersection, gal_ub.carrier,
                           gal_ub.via_intersection);
    if (std::find(seen.begin(), seen.end(), ind.map()) == seen.end()) {
      seen.push_back(ind.map());
      result = ind;
    }
  }
  if (seen.size() != 1) throw ComparisonFailure("pi1_morphism: lifting choice matters");
  return result;
}

Hom kappa(const Extension& p, const WeaklyUniversalCert& cert,
          const GaloisGroupResult& gal_p, const GaloisGroupResult& gal_u,
          bool reverse_search) {
  if (!p.cod().same_table(cert.u.cod())) throw CodMismatch("kappa: codomain mismatch");
  auto lifts = enumerate_homs(cert.u.dom(), p.dom(), HomConstraint{p.hom, cert.u.hom});
  if (lifts.empty()) throw NoLifting("kappa: no lifting of " + cert.u.name + " through " + p.name);
  std::vector<std::vector<Elt>> seen;
  Hom result;
  auto consider = [&](const Hom& h) {
    Hom ind = restrict_hom(h, gal_u.carrier, gal_u.via_intersection, gal_p.carrier,
                           gal_p.via_intersection);
    if (std::find(seen.begin(), seen.end(), ind.map()) == seen.end()) {
      seen.push_back(ind.map());
      result = ind;
    }
  };
  if (reverse_search)
    for (auto it = lifts.rbegin(); it != lifts.rend(); ++it) consider(*it);
  else
    for (const auto& h : lifts) consider(h);
  if (seen.size() != 1) throw ComparisonFailure("kappa: lifting choice matters");
  return result;
}

}  // namespace catgal::gal
