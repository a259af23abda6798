#pragma once

#include <string>

#include "json.hpp"

#include "catgal/group.hpp"

namespace catgal::io {

using json = nlohmann::json;

json load_json(const std::string& path);

/// Group JSON: {"name", "order", "table": [[...]]} or
/// {"name", "degree", "generators": [[cycle lists]]}.
grp::Group group_from_json(const json& j);
grp::Group load_group(const std::string& path);

/// A group reference inside another file: {"file": relpath} (relative to
/// `base_dir`) or an inline group object.
grp::Group resolve_group(const json& j, const std::string& base_dir);

/// Hom/extension JSON: {"name", "dom": ref, "cod": ref, "map": [...]}.
grp::Hom hom_from_json(const json& j, const std::string& base_dir);
grp::Hom load_hom(const std::string& path);

std::string dir_of(const std::string& path);

}  // namespace catgal::io
