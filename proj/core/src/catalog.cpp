#include "pgph/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pgph/error.hpp"

#ifndef PGPH_DEFAULT_CATALOG
#define PGPH_DEFAULT_CATALOG "data/catalog"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace pgph {

void to_json(json& j, const GroupFile& f) {
  json gens = json::array();
  for (const auto& g : f.generators) {
    json img = json::array();
    for (auto x : g) img.push_back(x + 1);
    gens.push_back(std::move(img));
  }
  j = json{{"name", f.name}, {"degree", f.degree}, {"generators", std::move(gens)}, {"tags", f.tags}};
}

void from_json(const json& j, GroupFile& f) {
  if (!j.is_object()) throw DataError("group file is not a JSON object");
  for (const char* key : {"name", "degree", "generators"})
    if (!j.contains(key)) throw DataError(std::string("missing field '") + key + "'");
  f.name = j.at("name").get<std::string>();
  const auto degree = j.at("degree").get<long long>();
  if (degree < 1) throw DataError("degree must be positive");
  f.degree = static_cast<std::size_t>(degree);
  f.tags = j.value("tags", std::vector<std::string>{});
  f.generators.clear();
  for (const auto& g : j.at("generators")) {
    const auto images = g.get<std::vector<long long>>();
    if (images.size() != f.degree)
      throw DataError("generator " + std::to_string(f.generators.size() + 1) + " has " +
                      std::to_string(images.size()) + " images, expected " + std::to_string(f.degree));
    Permutation p(f.degree);
    std::vector<bool> hit(f.degree, false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const long long v = images[i];
      if (v < 1 || v > degree || hit[static_cast<std::size_t>(v - 1)])
        throw DataError("generator " + std::to_string(f.generators.size() + 1) + " is not a permutation of 1.." +
                        std::to_string(degree));
      hit[static_cast<std::size_t>(v - 1)] = true;
      p[i] = static_cast<std::uint32_t>(v - 1);
    }
    f.generators.push_back(std::move(p));
  }
}

GroupFile read_group_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string() + ": cannot open");
  try {
    return json::parse(in).get<GroupFile>();
  } catch (const json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void write_group_file(const fs::path& path, const GroupFile& f) {
  std::ofstream out(path);
  if (!out) throw DataError(path.string() + ": cannot write");
  out << json(f).dump() << '\n';
}

GroupPtr build_group(const GroupFile& f) {
  const auto cap = budget().max_group_order;
  if (f.generators.empty()) return group_from_permutations(std::vector<Permutation>{Permutation(f.degree)}, f.name, cap);
  return group_from_permutations(f.generators, f.name, cap);
}

std::string_view to_string(Provenance p) noexcept { return p == Provenance::bundled ? "bundled" : "ingested"; }

namespace {

CatalogEntry make_entry(const std::string& id, const fs::path& file) {
  CatalogEntry e;
  e.id = id;
  e.file = read_group_file(file);
  e.provenance = std::find(e.file.tags.begin(), e.file.tags.end(), "bundled") != e.file.tags.end()
                     ? Provenance::bundled
                     : Provenance::ingested;
  try {
    e.group = build_group(e.file);
  } catch (const DataError& err) {
    throw DataError(file.string() + ": " + err.what());
  }
  const auto dot = id.find('.');
  const std::string order = id.substr(0, dot);
  if (dot == std::string::npos || order.empty() || order.find_first_not_of("0123456789") != std::string::npos)
    throw DataError(file.string() + ": id '" + id + "' does not start with an order");
  if (std::stoull(order) != e.group->order())
    throw DataError(file.string() + ": id '" + id + "' names order " + order + " but the group has order " +
                    std::to_string(e.group->order()));
  return e;
}

}  // namespace

std::vector<CatalogEntry> load_catalog(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw DataError(dir.string() + ": not a catalog directory");
  const fs::path index = dir / "index.json";
  if (!fs::exists(index)) {
    if (fs::is_empty(dir)) return {};
    throw DataError(index.string() + ": missing index file");
  }
  std::vector<std::string> ids;
  try {
    std::ifstream in(index);
    ids = json::parse(in).at("groups").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw DataError(index.string() + ": " + e.what());
  }
  std::set<std::string> seen;
  std::vector<CatalogEntry> out;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) throw DataError(index.string() + ": duplicate id '" + id + "'");
    out.push_back(make_entry(id, dir / (id + ".json")));
  }
  return out;
}

fs::path bundled_root() {
  if (const char* env = std::getenv("PGPH_CATALOG"); env != nullptr && *env != '\0') return env;
  return PGPH_DEFAULT_CATALOG;
}

fs::path resolve_catalog_dir(std::string_view name) {
  const std::string s(name);
  if (s.rfind("bundled", 0) == 0 && s.size() > 7 && s.find_first_not_of("0123456789", 7) == std::string::npos)
    return bundled_root() / ("order" + s.substr(7));
  if (fs::is_directory(s)) return s;
  if (s.find('/') == std::string::npos && fs::is_directory(bundled_root() / s)) return bundled_root() / s;
  throw DataError("catalog '" + s + "' not found");
}

CatalogEntry load_group(std::string_view selector) {
  constexpr std::string_view prefix = "catalog:";
  if (selector.substr(0, prefix.size()) != prefix) {
    const fs::path path(selector);
    auto stem = path.stem().string();
    CatalogEntry e;
    e.id = stem;
    e.file = read_group_file(path);
    e.provenance = Provenance::ingested;
    try {
      e.group = build_group(e.file);
    } catch (const DataError& err) {
      throw DataError(path.string() + ": " + err.what());
    }
    return e;
  }
  const std::string id(selector.substr(prefix.size()));
  const fs::path root = bundled_root();
  if (fs::is_directory(root)) {
    std::vector<fs::path> dirs;
    for (const auto& d : fs::directory_iterator(root))
      if (d.is_directory()) dirs.push_back(d.path());
    std::sort(dirs.begin(), dirs.end());
    for (const auto& d : dirs)
      if (fs::exists(d / (id + ".json"))) return make_entry(id, d / (id + ".json"));
  }
  throw DataError("catalog id '" + id + "' not found under " + root.string());
}

}  // namespace pgph
