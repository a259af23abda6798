#include "catgal/kan.hpp"

#include <algorithm>
#include <filesystem>

#include "catgal/structure.hpp"

namespace catgal::kan {

using namespace grp;
using io::json;

Extension resolve_universal(const json& j, const std::string& base_dir, const Group& base) {
  if (j.is_object() && j.value("identity", false))
    return Extension::make(Hom::identity(base), "id_" + base.name());
  if (j.is_object() && j.contains("file")) {
    auto p = std::filesystem::path(base_dir) / j.at("file").get<std::string>();
    Hom h = io::load_hom(p.lexically_normal().string());
    if (!h.cod().same_table(base)) throw SchemaError("universal codomain mismatch");
    return Extension::make(std::move(h));
  }
  throw SchemaError("universal: expected {\"identity\":true} or {\"file\":...}");
}

Extension resolve_family_entry(const json& j, const std::string& base_dir, const Group& base,
                               const Extension& u) {
  if (!j.is_object()) throw SchemaError("family entry must be an object");
  if (j.value("identity", false))
    return Extension::make(Hom::identity(base), "id_" + base.name());
  if (j.contains("file")) {
    auto p = std::filesystem::path(base_dir) / j.at("file").get<std::string>();
    Hom h = io::load_hom(p.lexically_normal().string());
    if (!h.cod().same_table(base)) throw SchemaError("family member codomain mismatch");
    return Extension::make(std::move(h));
  }
  if (j.contains("trivial_cover")) {
    Group a = io::resolve_group(j.at("trivial_cover"), base_dir);
    auto pr = product(base, a);
    return Extension::make(pr.p1, base.name() + "x" + a.name() + "->" + base.name());
  }
  if (j.contains("product_with")) {
    Group a = io::resolve_group(j.at("product_with"), base_dir);
    auto pr = product(u.dom(), a);
    return Extension::make(Hom::compose(u.hom, pr.p1),
                           u.dom().name() + "x" + a.name() + "->" + base.name());
  }
  throw SchemaError("unknown family entry");
}

namespace {

Hom kernel_restriction(const Extension& p, const Extension& q, const Hom& f,
                       const Group& kp, const Group& kq) {
  return restrict_hom(f, p.kernel, kp, q.kernel, kq);
}

}  // namespace

Scenario load_scenario(const std::string& path) {
  json j = io::load_json(path);
  std::string dir = io::dir_of(path);
  Scenario s;
  s.name = j.value("name", "scenario");
  s.kind = j.value("kind", "kan");
  if (s.kind != "kan" && s.kind != "ker") throw SchemaError("kind must be kan or ker");

  if (!j.contains("bases")) throw SchemaError("missing bases");
  for (const auto& jb : j.at("bases")) {
    ScenarioBase b;
    b.name = jb.at("name").get<std::string>();
    b.group = io::resolve_group(jb.at("group"), dir);
    Extension u = resolve_universal(jb.at("universal"), dir, b.group);
    std::vector<Extension> family;
    for (const auto& jf : jb.at("family"))
      family.push_back(resolve_family_entry(jf, dir, b.group, u));
    b.cert = gal::verify_weakly_universal(u, family);
    s.bases.push_back(std::move(b));
  }

  // functor object tables
  if (!j.contains("functor")) throw SchemaError("missing functor");
  for (auto& b : s.bases) {
    if (!j.at("functor").contains(b.name))
      throw SchemaError("functor table missing for base " + b.name);
    b.f_obj = io::group_from_json(json{{"name", "F(" + b.name + ")"},
                                       {"table", j.at("functor").at(b.name).at("table")}});
    if (!b.f_obj.abelian()) throw SchemaError("F(" + b.name + ") must be abelian");
  }

  auto base_index = [&](const std::string& n) {
    for (std::size_t i = 0; i < s.bases.size(); ++i)
      if (s.bases[i].name == n) return (int)i;
    throw SchemaError("unknown base " + n);
  };

  if (!j.contains("extensions")) throw SchemaError("missing extensions");
  for (const auto& je : j.at("extensions")) {
    ScenarioExtension e;
    e.name = je.at("name").get<std::string>();
    e.base = base_index(je.at("base").get<std::string>());
    if (je.contains("file")) {
      auto p = std::filesystem::path(dir) / je.at("file").get<std::string>();
      e.ext = Extension::make(io::load_hom(p.lexically_normal().string()), e.name);
    } else {
      e.ext = Extension::make(io::hom_from_json(je, dir), e.name);
    }
    if (!e.ext.cod().same_table(s.bases[e.base].group))
      throw SchemaError("extension " + e.name + " codomain is not its base");
    if (!structure::is_normal_extension(e.ext))
      throw SchemaError("extension " + e.name + " is not a normal extension");
    e.gal = gal::galois_group(e.ext);
    if (s.kind == "ker")
      e.ker_group = subgroup_as_group(e.ext.kernel, "Ker(" + e.name + ")");
    s.exts.push_back(std::move(e));
  }

  // the universal of each base must be listed so gamma_u exists
  for (std::size_t bi = 0; bi < s.bases.size(); ++bi) {
    auto& b = s.bases[bi];
    for (std::size_t ei = 0; ei < s.exts.size(); ++ei) {
      const auto& e = s.exts[ei];
      if (e.base == (int)bi && e.ext.dom().same_table(b.cert.u.dom()) &&
          e.ext.hom.map() == b.cert.u.hom.map()) {
        b.u_ext = (int)ei;
        break;
      }
    }
    if (b.u_ext < 0)
      throw SchemaError("universal of base " + b.name + " is not among the extensions");
  }

  // gamma components
  if (!j.contains("gamma")) throw SchemaError("missing gamma");
  for (auto& e : s.exts) {
    if (!j.at("gamma").contains(e.name)) throw SchemaError("gamma missing for " + e.name);
    e.gamma_raw = j.at("gamma").at(e.name).get<std::vector<int>>();
    const Group& fb = s.bases[e.base].f_obj;
    if ((int)e.gamma_raw.size() != fb.order())
      throw SchemaError("gamma for " + e.name + " has wrong length");
    std::vector<int> mapped(e.gamma_raw.size());
    if (s.kind == "kan") {
      for (std::size_t i = 0; i < e.gamma_raw.size(); ++i) {
        int idx = e.gal.carrier.index_of(e.gamma_raw[i]);
        if (idx < 0)
          throw SchemaError("gamma for " + e.name + " leaves the Galois carrier at F-element " +
                            std::to_string(i));
        mapped[i] = idx;
      }
      try {
        e.gamma = Hom::make(fb, e.gal.via_intersection, mapped);
      } catch (const NotAHom& err) {
        throw SchemaError("gamma for " + e.name + " is not a hom: " + err.what());
      }
    } else {
      for (std::size_t i = 0; i < e.gamma_raw.size(); ++i) {
        int idx = e.ext.kernel.index_of(e.gamma_raw[i]);
        if (idx < 0)
          throw SchemaError("gamma for " + e.name + " leaves Ker at F-element " +
                            std::to_string(i));
        mapped[i] = idx;
      }
      try {
        e.gamma = Hom::make(fb, e.ker_group, mapped);
      } catch (const NotAHom& err) {
        throw SchemaError("gamma for " + e.name + " is not a hom: " + err.what());
      }
    }
  }

  // morphisms and the F tables on them
  for (const auto& jm : j.value("morphisms", json::array())) {
    ScenarioMorphism m;
    m.name = jm.at("name").get<std::string>();
    auto ext_index = [&](const std::string& n) {
      for (std::size_t i = 0; i < s.exts.size(); ++i)
        if (s.exts[i].name == n) return (int)i;
      throw SchemaError("unknown extension " + n);
    };
    m.from = ext_index(jm.at("from").get<std::string>());
    m.to = ext_index(jm.at("to").get<std::string>());
    const auto& ef = s.exts[m.from];
    const auto& et = s.exts[m.to];
    m.f = Hom::make(ef.ext.dom(), et.ext.dom(), jm.at("f").get<std::vector<int>>());
    m.b = Hom::make(ef.ext.cod(), et.ext.cod(), jm.at("b").get<std::vector<int>>());
    gal::validate_square(ef.ext, et.ext, {m.f, m.b});
    m.fb = Hom::make(s.bases[ef.base].f_obj, s.bases[et.base].f_obj,
                     jm.at("Fb").get<std::vector<int>>());
    s.morphisms.push_back(std::move(m));
  }

  // functoriality of F on the listed morphisms
  for (const auto& m : s.morphisms) {
    if (m.b.equal_map(Hom::identity(m.b.dom())) && !m.fb.equal_map(Hom::identity(m.fb.dom())))
      throw SchemaError("F must send the identity base morphism of " + m.name +
                        " to the identity");
    for (const auto& m2 : s.morphisms) {
      if (&m2 == &m) continue;
      if (m.from == m2.from && m.to == m2.to && m.b.equal_map(m2.b) && m.f.equal_map(m2.f) &&
          !m.fb.equal_map(m2.fb))
        throw SchemaError("inconsistent F on equal morphisms " + m.name + ", " + m2.name);
    }
  }
  for (const auto& m1 : s.morphisms)
    for (const auto& m2 : s.morphisms) {
      if (m1.to != m2.from) continue;
      for (const auto& m3 : s.morphisms) {
        if (m3.from != m1.from || m3.to != m2.to) continue;
        if (Hom::compose(m2.f, m1.f).equal_map(m3.f) &&
            Hom::compose(m2.b, m1.b).equal_map(m3.b) &&
            !Hom::compose(m2.fb, m1.fb).equal_map(m3.fb))
          throw SchemaError("F not functorial on " + m1.name + ";" + m2.name + " vs " + m3.name);
      }
    }

  // naturality of gamma on every listed square
  for (const auto& m : s.morphisms) {
    const auto& ef = s.exts[m.from];
    const auto& et = s.exts[m.to];
    if (s.kind == "kan") {
      Hom galmap = gal::gal_on_morphism(ef.ext, et.ext, {m.f, m.b}, ef.gal, et.gal, false);
      for (int x = 0; x < m.fb.dom().order(); ++x)
        if (galmap(ef.gamma(x)) != et.gamma(m.fb(x)))
          throw NaturalityViolation("square " + m.name + " at F-element " + std::to_string(x));
    } else {
      Hom kmap = kernel_restriction(ef.ext, et.ext, m.f, ef.ker_group, et.ker_group);
      for (int x = 0; x < m.fb.dom().order(); ++x)
        if (kmap(ef.gamma(x)) != et.gamma(m.fb(x)))
          throw NaturalityViolation("square " + m.name + " at F-element " + std::to_string(x));
    }
  }

  // kernel-valued gamma: naturality against the unit-collapse squares
  // p -> (IE -> 0) <- (0 -> 0), which are always available normal extensions;
  // it forces eta_E . ker p . gamma_p = 0
  if (s.kind == "ker") {
    for (const auto& e : s.exts) {
      auto eta = abelianization(e.ext.dom());
      for (int x = 0; x < e.gamma.dom().order(); ++x) {
        Elt val = e.ext.kernel.elems[e.gamma(x)];
        if (eta.proj(val) != 0)
          throw NaturalityViolation("unit-collapse square at " + e.name + ", F-element " +
                                    std::to_string(x) + ", element " + std::to_string(val));
      }
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

KanVerdict check_kappa_kan(const Scenario& s) {
  KanVerdict v;
  // the Kan property is only sensible for Gal-valued gamma
  if (s.kind != "kan") throw SchemaError("check_kappa_kan needs a kan-kind scenario");

  // alpha_B := gamma_{u_B}
  for (const auto& b : s.bases) v.alpha.push_back(s.exts[b.u_ext].gamma);

  // factorization kappa_p . alpha_B = gamma_p for every listed extension
  for (const auto& e : s.exts) {
    const auto& b = s.bases[e.base];
    const auto& gal_u = s.exts[b.u_ext].gal;
    Hom kp;
    try {
      kp = gal::kappa(e.ext, b.cert, e.gal, gal_u);
    } catch (const NoLifting& err) {
      v.factorization_ok = false;
      v.witnesses.push_back("no lifting square (h,1_B) for " + e.name + ": " + err.what());
      continue;
    }
    const Hom& alpha = v.alpha[e.base];
    for (int x = 0; x < alpha.dom().order(); ++x)
      if (kp(alpha(x)) != e.gamma(x)) {
        v.factorization_ok = false;
        v.witnesses.push_back("factorization fails on the lifting square (h,1_B) of " + e.name +
                              " at F-element " + std::to_string(x));
        break;
      }
  }

  // naturality of alpha across the distinct base morphisms
  for (const auto& m : s.morphisms) {
    int bf = s.exts[m.from].base, bt = s.exts[m.to].base;
    const auto& cf = s.bases[bf];
    const auto& ct = s.bases[bt];
    Hom pi1b;
    try {
      pi1b = gal::pi1_morphism(m.b, cf.cert, ct.cert, s.exts[cf.u_ext].gal,
                               s.exts[ct.u_ext].gal);
    } catch (const NoLifting& err) {
      v.factorization_ok = false;
      v.witnesses.push_back("pi1 of base morphism " + m.name + ": " + err.what());
      continue;
    }
    for (int x = 0; x < m.fb.dom().order(); ++x)
      if (pi1b(v.alpha[bf](x)) != v.alpha[bt](m.fb(x))) {
        v.factorization_ok = false;
        v.witnesses.push_back("alpha not natural on base morphism of " + m.name +
                              " at F-element " + std::to_string(x));
        break;
      }
  }

  // uniqueness: kappa_{u} is an isomorphism, so any beta with
  // kappa . beta_cod = gamma has beta_B = kappa_u^{-1} . gamma_u = alpha_B
  for (std::size_t bi = 0; bi < s.bases.size(); ++bi) {
    const auto& b = s.bases[bi];
    const auto& gal_u = s.exts[b.u_ext].gal;
    Hom ku = gal::kappa(b.cert.u, b.cert, gal_u, gal_u);
    if (!ku.bijective()) {
      v.uniqueness_ok = false;
      v.witnesses.push_back("kappa_u not bijective for base " + b.name);
      continue;
    }
    std::vector<Elt> inv(ku.cod().order());
    for (Elt x = 0; x < ku.dom().order(); ++x) inv[ku(x)] = x;
    const Hom& gamma_u = s.exts[b.u_ext].gamma;
    for (int x = 0; x < gamma_u.dom().order(); ++x)
      if (inv[gamma_u(x)] != v.alpha[bi](x)) {
        v.uniqueness_ok = false;
        v.witnesses.push_back("forced beta differs from alpha at base " + b.name);
        break;
      }
  }
  return v;
}

IotaReport check_iota_factorization(const Scenario& s) {
  if (s.kind != "ker") throw SchemaError("check_iota_factorization needs a ker-kind scenario");
  IotaReport rep;
  for (const auto& e : s.exts) {
    auto eta = abelianization(e.ext.dom());
    std::vector<int> lifted(e.gamma.dom().order());
    bool ok = true;
    for (int x = 0; x < e.gamma.dom().order(); ++x) {
      Elt val = e.ext.kernel.elems[e.gamma(x)];
      if (eta.proj(val) != 0) {
        rep.ok = false;
        ok = false;
        rep.witnesses.push_back(e.name + ": eta.ker.gamma nonzero at F-element " +
                                std::to_string(x) + " (element " + std::to_string(val) + ")");
        break;
      }
      int idx = e.gal.carrier.index_of(val);
      if (idx < 0) throw std::logic_error("factoring element missing from the intersection");
      lifted[x] = idx;
    }
    if (ok) rep.lifted.push_back(Hom::make(e.gamma.dom(), e.gal.via_intersection, lifted));
  }
  return rep;
}

Hom delta_component(const Extension& p, const gal::WeaklyUniversalCert& cert) {
  auto gal_p = gal::galois_group(p);
  auto gal_u = gal::galois_group(cert.u);
  Hom kp = gal::kappa(p, cert, gal_p, gal_u);
  Group kerg = subgroup_as_group(p.kernel, "Ker(" + p.name + ")");
  std::vector<Elt> incl(gal_p.carrier.order());
  for (int i = 0; i < gal_p.carrier.order(); ++i) {
    int idx = p.kernel.index_of(gal_p.carrier.elems[i]);
    if (idx < 0) throw std::logic_error("Gal carrier escapes the kernel");
    incl[i] = idx;
  }
  Hom iota = Hom::make(gal_p.via_intersection, kerg, std::move(incl));
  return Hom::compose(iota, kp);
}

Hom kan_via_reflection(const Extension& p, const gal::WeaklyUniversalCert& cert) {
  auto refl = structure::central_reflection(p);
  auto gal_r = gal::galois_group(refl.reflected);
  auto gal_u = gal::galois_group(cert.u);
  Hom kp = gal::kappa(refl.reflected, cert, gal_r, gal_u, /*reverse_search=*/true);
  Group kerg = subgroup_as_group(refl.reflected.kernel, "Ker(I1(" + p.name + "))");
  std::vector<Elt> incl(gal_r.carrier.order());
  for (int i = 0; i < gal_r.carrier.order(); ++i)
    incl[i] = refl.reflected.kernel.index_of(gal_r.carrier.elems[i]);
  Hom iota = Hom::make(gal_r.via_intersection, kerg, std::move(incl));
  return Hom::compose(iota, kp);
}

}  // namespace catgal::kan
