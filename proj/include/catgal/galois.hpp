#pragma once

#include <string>
#include <vector>

#include "catgal/group.hpp"
#include "catgal/groupoid.hpp"

// Galois groups of normal extensions (two independent routes), Baer
// invariance, weakly universal normal extensions, pi1 and the kappa
// components.

namespace catgal::gal {

using grp::Extension;
using grp::Group;
using grp::Hom;
using grp::Subgroup;

struct GaloisGroupResult {
  Group via_groupoid;     // Aut(0) of the reflected kernel-pair groupoid
  Group via_intersection; // Ker(p) cap Ker(eta_E) with inherited multiplication
  Subgroup carrier;       // that intersection inside dom(p)
  Hom comparison;         // via_intersection -> via_groupoid, k |-> [(0,k)]
};

/// Both routes; throws NotNormal when p is not a normal extension and
/// ComparisonFailure if the canonical comparison fails to be a bijective hom
/// (which would be an implementation bug, not an input property).
GaloisGroupResult galois_group(const Extension& p);

/// A morphism of extensions (f, b): p -> p' with b . p = p' . f.
struct ExtMorphism {
  Hom f;
  Hom b;
};
void validate_square(const Extension& p, const Extension& q, const ExtMorphism& m);

/// Induced map Gal(p,0) -> Gal(p',0).  Computed on the intersection route;
/// when `check_groupoid_route` is set, also computed through the reflected
/// functor and compared under the two comparisons.
Hom gal_on_morphism(const Extension& p, const Extension& q, const ExtMorphism& m,
                    const GaloisGroupResult& gp, const GaloisGroupResult& gq,
                    bool check_groupoid_route = true);

struct BaerReport {
  std::int64_t maps_tested = 0;
  int distinct_induced = 0;
  Hom induced;  // the common induced map (when maps_tested > 0)
};

/// Enumerates all f with q.hom . f = b . p.hom and checks they all induce the
/// same map on Galois groups.
BaerReport baer_check(const Extension& p, const Extension& q, const Hom& b,
                      std::int64_t budget = limits().hom_budget);

struct WeaklyUniversalCert {
  Extension u;
  std::vector<Extension> family;
  std::vector<Hom> liftings;  // one per family member, u = p . lifting
  bool stem = false;          // Ker(u) inside Z(U) cap [U,U]
};

/// Finds one lifting per family member or throws NoLifting naming the member.
WeaklyUniversalCert verify_weakly_universal(const Extension& u,
                                            const std::vector<Extension>& family);

struct Pi1Result {
  Group group;
  GaloisGroupResult gal;
  bool stem = false;
};

/// Gal(u,0) of the certified extension.
Pi1Result pi1_object(const WeaklyUniversalCert& cert);

/// Induced map pi1(A) -> pi1(B) along f: pull u_B back, lift u_A through the
/// pullback, restrict.  All lifting choices are checked to agree.
Hom pi1_morphism(const Hom& f, const WeaklyUniversalCert& ua, const WeaklyUniversalCert& ub,
                 const GaloisGroupResult& gal_ua, const GaloisGroupResult& gal_ub);

/// kappa_p: Gal(u,0) -> Gal(p,0) via any lifting h with p . h = u; all
/// liftings are checked to induce the same map.  `reverse_search` picks the
/// last lifting instead of the first (the result must not change).
Hom kappa(const Extension& p, const WeaklyUniversalCert& cert,
          const GaloisGroupResult& gal_p, const GaloisGroupResult& gal_u,
          bool reverse_search = false);

/// The reflected kernel-pair functor induced by f on I(Eq(p)) -> I(Eq(q)).
gpd::InternalFunctor reflected_kp_functor(const gpd::KernelPairData& rp,
                                          const gpd::ReflectedGroupoid& reflp,
                                          const gpd::KernelPairData& rq,
                                          const gpd::ReflectedGroupoid& reflq, const Hom& f);

}  // namespace catgal::gal
