#pragma once

#include <string>
#include <vector>

#include "catgal/galois.hpp"
#include "catgal/json_io.hpp"

// Finite verification of the Kan-extension universal properties over scenario
// diagrams: the kappa factorization/uniqueness checks, the iota-factorization
// of kernel-valued transformations, and the delta components.

namespace catgal::kan {

struct ScenarioBase {
  std::string name;
  grp::Group group;
  gal::WeaklyUniversalCert cert;
  grp::Group f_obj;   // F(B), an abelian group
  int u_ext = -1;     // index of the universal among the scenario extensions
};

struct ScenarioExtension {
  std::string name;
  grp::Extension ext;
  int base = -1;
  gal::GaloisGroupResult gal;
  std::vector<int> gamma_raw;  // element indices in dom(ext), F(B)-indexed
  grp::Hom gamma;              // F(B) -> Gal carrier (kan) or Ker carrier (ker)
  grp::Group ker_group;        // kernel as a group (ker kind)
};

struct ScenarioMorphism {
  std::string name;
  int from = -1, to = -1;
  grp::Hom f, b;
  grp::Hom fb;  // F(b)
};

struct Scenario {
  std::string name;
  std::string kind;  // "kan" or "ker"
  std::vector<ScenarioBase> bases;
  std::vector<ScenarioExtension> exts;
  std::vector<ScenarioMorphism> morphisms;
};

/// Parses and validates a scenario: functoriality of the F tables and
/// naturality of gamma on every listed square are checked here, plus (for
/// kernel-valued gamma) naturality on the unit-collapse squares
/// p -> (I(E) -> 0) <- (0 -> 0), which forces eta . ker . gamma_p = 0.
Scenario load_scenario(const std::string& path);

struct KanVerdict {
  std::vector<grp::Hom> alpha;  // one component per base
  bool factorization_ok = true;
  bool uniqueness_ok = true;
  std::vector<std::string> witnesses;
};

KanVerdict check_kappa_kan(const Scenario& s);

struct IotaReport {
  bool ok = true;
  std::vector<std::string> witnesses;
  std::vector<grp::Hom> lifted;  // per extension: F(B) -> Gal carrier
};

IotaReport check_iota_factorization(const Scenario& s);

/// delta_p = iota . kappa_p : pi1(B) -> Ker(p).
grp::Hom delta_component(const grp::Extension& p, const gal::WeaklyUniversalCert& cert);

/// delta of the central reflection I1(p), for arbitrary surjective p.
grp::Hom kan_via_reflection(const grp::Extension& p, const gal::WeaklyUniversalCert& cert);

/// Family entry resolution shared with the CLI pi1 fixtures:
/// {"identity":true} | {"file": ext} | {"trivial_cover": groupref} |
/// {"product_with": groupref}.
grp::Extension resolve_family_entry(const io::json& j, const std::string& base_dir,
                                    const grp::Group& base, const grp::Extension& u);

grp::Extension resolve_universal(const io::json& j, const std::string& base_dir,
                                 const grp::Group& base);

}  // namespace catgal::kan
