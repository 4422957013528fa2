#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pgph/group.hpp"

namespace pgph {

/// Contents of one group file. Generators are zero-based here; the file
/// stores one-based image lists.
struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<std::string> tags;

  friend bool operator==(const GroupFile&, const GroupFile&) = default;
};

void to_json(nlohmann::json& j, const GroupFile& f);
void from_json(const nlohmann::json& j, GroupFile& f);

/// Throws DataError naming `path` when the file is unreadable or malformed.
GroupFile read_group_file(const std::filesystem::path& path);
void write_group_file(const std::filesystem::path& path, const GroupFile& f);

/// Builds and validates the permutation group. Throws DataError.
GroupPtr build_group(const GroupFile& f);

enum class Provenance { bundled, ingested };
std::string_view to_string(Provenance p) noexcept;

struct CatalogEntry {
  std::string id;  ///< "order.index" or "order.name"
  Provenance provenance = Provenance::ingested;
  GroupFile file;
  GroupPtr group;
};

/// Loads every group listed in `dir`/index.json, in index order. A directory
/// without files gives an empty list; a missing index next to group files is
/// a DataError. Ids must be unique and start with the group order.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir);

/// Root of the bundled catalog: $PGPH_CATALOG, else the build-time default.
std::filesystem::path bundled_root();

/// A directory, or one of the aliases bundled8, bundled16, bundled27 or the
/// name of a bundled subdirectory (small, abelian, families, ...).
std::filesystem::path resolve_catalog_dir(std::string_view name);

/// "catalog:ID" searches the bundled subdirectories; anything else is a group file path.
CatalogEntry load_group(std::string_view selector);

}  // namespace pgph
