#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "pgph/classify.hpp"
#include "pgph/coclass.hpp"
#include "pgph/persistence.hpp"

namespace pgph {

/// {"group","functor","degree","termOrders","matrix"}; rows padded with 0 below the diagonal.
nlohmann::json to_json(const PersistenceMatrix& m);
/// Same shape with {"A","B","C"} triples in place of ranks; null below the diagonal.
nlohmann::json to_json(const IntegralPersistenceMatrix& m);
nlohmann::json to_json(const Barcode& b);
/// "classes" is the class count; the classes themselves are under "partition".
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const TreePersistenceReport& r);
nlohmann::json to_json(const SecondHomologyReport& r);

/// One line per bar: "[birth,death] x multiplicity".
std::string render_text(const Barcode& b);

/// Deterministic SVG. Columns are evenly spaced with column 1 leftmost; every
/// bar copy gets its own row, drawn as a segment with a filled circle at each
/// end, or as a single circle when birth == death.
std::string render_svg(const Barcode& b);

}  // namespace pgph
