#include "catgal/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace catgal::io {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return j;
}

std::string dir_of(const std::string& path) {
  return std::filesystem::path(path).parent_path().string();
}

grp::Group group_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("group: expected object");
  std::string name = j.value("name", "g");
  if (j.contains("table")) {
    auto rows = j.at("table").get<std::vector<std::vector<int>>>();
    return grp::Group::from_table(name, rows);
  }
  if (j.contains("generators")) {
    int degree = j.at("degree").get<int>();
    std::vector<std::vector<int>> perms;
    for (const auto& gen : j.at("generators")) {
      std::vector<int> p(degree);
      for (int i = 0; i < degree; ++i) p[i] = i;
      // cycle notation: list of cycles, each a list of points
      for (const auto& cyc : gen) {
        auto c = cyc.get<std::vector<int>>();
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (c[i] < 0 || c[i] >= degree) throw SchemaError(name + ": cycle point out of range");
          p[c[i]] = c[(i + 1) % c.size()];
        }
      }
      perms.push_back(std::move(p));
    }
    return grp::Group::from_permutations(name, degree, perms, limits().max_order);
  }
  throw SchemaError("group " + name + ": needs \"table\" or \"generators\"");
}

grp::Group load_group(const std::string& path) { return group_from_json(load_json(path)); }

grp::Group resolve_group(const json& j, const std::string& base_dir) {
  if (j.is_object() && j.contains("file")) {
    auto p = std::filesystem::path(base_dir) / j.at("file").get<std::string>();
    return load_group(p.lexically_normal().string());
  }
  return group_from_json(j);
}

grp::Hom hom_from_json(const json& j, const std::string& base_dir) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("map"))
    throw SchemaError("hom: needs dom, cod, map");
  grp::Group dom = resolve_group(j.at("dom"), base_dir);
  grp::Group cod = resolve_group(j.at("cod"), base_dir);
  return grp::Hom::make(dom, cod, j.at("map").get<std::vector<int>>());
}

grp::Hom load_hom(const std::string& path) {
  return hom_from_json(load_json(path), dir_of(path));
}

}  // namespace catgal::io
