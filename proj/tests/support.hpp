#pragma once

#include <string>

#include "catgal/json_io.hpp"

namespace testsup {

inline std::string fixture(const std::string& rel) {
  return std::string(FIXTURE_DIR) + "/" + rel;
}

inline std::string scenario(const std::string& rel) {
  return std::string(SCENARIO_DIR) + "/" + rel;
}

inline catgal::grp::Group G(const std::string& name) {
  return catgal::io::load_group(fixture("groups/" + name + ".json"));
}

inline catgal::grp::Extension E(const std::string& name) {
  return catgal::grp::Extension::make(catgal::io::load_hom(fixture("exts/" + name + ".json")),
                                      name);
}

inline catgal::grp::Hom H(const std::string& name) {
  return catgal::io::load_hom(fixture("homs/" + name + ".json"));
}

}  // namespace testsup
