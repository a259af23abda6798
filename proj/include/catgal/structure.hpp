#pragma once

#include "catgal/group.hpp"

// The concrete Galois structure on finite groups: reflector I = abelianisation
// into abelian groups, H the inclusion, fibrations the surjective homs.

namespace catgal::structure {

using grp::Extension;
using grp::Group;
using grp::Hom;

struct GaloisClassification {
  bool is_fibration = false;
  bool is_trivial_covering = false;
  bool is_central = false;
  bool is_normal = false;
};

/// True iff the canonical comparison A -> B x_{I(B)} I(A) is bijective.
/// Cross-checked internally against the restriction [A,A] -> [B,B] being an
/// isomorphism; a disagreement would be a bug, not an input property.
bool is_trivial_covering(const Extension& p);

/// Ker(p) is contained in the center of the domain.
bool is_central(const Extension& p);

/// Kernel-pair definition: both projections of Eq(p) are trivial coverings.
bool is_normal_extension(const Extension& p);

GaloisClassification classify(const Hom& f);

struct CentralReflectionResult {
  Extension reflected;  // I1(p): E/[K,E] -> B
  Hom unit;             // E -> E/[K,E]
};

/// The universal central quotient E/[K,E] -> B of an extension.
CentralReflectionResult central_reflection(const Extension& p);

/// f*(p) as an Extension over dom(f).
Extension pullback_extension(const Extension& p, const Hom& f);

/// The induced map I(f): I(A) -> I(B) on abelianisations.
Hom reflect_hom(const Hom& f, const grp::QuotientResult& ia, const grp::QuotientResult& ib);

}  // namespace catgal::structure
