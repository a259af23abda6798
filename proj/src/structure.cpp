#include "catgal/structure.hpp"

#include <stdexcept>

namespace catgal::structure {

using namespace grp;

Hom reflect_hom(const Hom& f, const QuotientResult& ia, const QuotientResult& ib) {
  // I(f)(eta_A(x)) := eta_B(f(x)); well defined since eta_B f kills [A,A]
  std::vector<Elt> m(ia.group.order(), -1);
  for (Elt x = 0; x < f.dom().order(); ++x) {
    Elt cls = ia.proj(x);
    Elt val = ib.proj(f(x));
    if (m[cls] >= 0 && m[cls] != val)
      throw std::logic_error("reflect_hom: induced map ill-defined");
    m[cls] = val;
  }
  return Hom::make(ia.group, ib.group, std::move(m));
}

bool is_trivial_covering(const Extension& p) {
  const Group& a = p.dom();
  const Group& b = p.cod();
  auto ia = abelianization(a);
  auto ib = abelianization(b);
  Hom ip = reflect_hom(p.hom, ia, ib);

  // comparison A -> B x_{I(B)} I(A), a |-> (p(a), eta_A(a))
  auto q = pullback(ib.proj /* B -> I(B) */, ip /* I(A) -> I(B) */);
  bool comparison_bijective = false;
  if (q.group.order() == a.order()) {
    std::vector<char> hit(q.group.order(), 0);
    comparison_bijective = true;
    for (Elt x = 0; x < a.order() && comparison_bijective; ++x) {
      int i = q.pair_index(p.hom(x), ia.proj(x));
      if (i < 0 || hit[i]) comparison_bijective = false;
      else hit[i] = 1;
    }
  }

  // cross-check: restriction [A,A] -> [B,B] is an isomorphism
  auto da = derived_subgroup(a);
  auto db = derived_subgroup(b);
  bool commutator_iso = false;
  if (da.order() == db.order()) {
    commutator_iso = true;
    std::vector<char> hit(b.order(), 0);
    for (Elt x : da.elems) {
      Elt y = p.hom(x);
      if (!db.contains(y) || hit[y]) {
        commutator_iso = false;
        break;
      }
      hit[y] = 1;
    }
  }
  if (comparison_bijective != commutator_iso)
    throw std::logic_error("trivial-covering routes disagree on " + p.name);
  return comparison_bijective;
}

bool is_central(const Extension& p) {
  auto z = center(p.dom());
  for (Elt k : p.kernel.elems)
    if (!z.contains(k)) return false;
  return true;
}

bool is_normal_extension(const Extension& p) {
  auto eq = pullback(p.hom, p.hom);
  Extension d1 = Extension::make(eq.p1, p.name + ".eq_p1");
  Extension d2 = Extension::make(eq.p2, p.name + ".eq_p2");
  return is_trivial_covering(d1) && is_trivial_covering(d2);
}

GaloisClassification classify(const Hom& f) {
  GaloisClassification c;
  c.is_fibration = f.surjective();
  if (!c.is_fibration) return c;
  Extension p = Extension::make(f);
  c.is_trivial_covering = is_trivial_covering(p);
  c.is_central = is_central(p);
  c.is_normal = is_normal_extension(p);
  return c;
}

CentralReflectionResult central_reflection(const Extension& p) {
  const Group& e = p.dom();
  auto ke = commutator_subgroup(e, p.kernel, whole(e));
  auto q = quotient(e, ke);
  // induced map E/[K,E] -> B
  std::vector<Elt> m(q.group.order(), -1);
  for (Elt x = 0; x < e.order(); ++x) {
    Elt cls = q.proj(x);
    if (m[cls] >= 0 && m[cls] != p.hom(x))
      throw std::logic_error("central_reflection: [K,E] not contained in Ker(p)");
    m[cls] = p.hom(x);
  }
  Extension refl = Extension::make(Hom::make(q.group, p.cod(), std::move(m)), "I1(" + p.name + ")");
  if (!is_central(refl)) throw std::logic_error("central_reflection: result not central");
  return {refl, q.proj};
}

Extension pullback_extension(const Extension& p, const Hom& f) {
  if (!f.cod().same_table(p.cod())) throw CodMismatch("pullback_extension");
  auto pb = pullback(f, p.hom);
  // the extension is the projection onto dom(f)
  return Extension::make(pb.p1, f.dom().name() + "*(" + p.name + ")");
}

}  // namespace catgal::structure
