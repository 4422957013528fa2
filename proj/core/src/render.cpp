#include "pgph/render.hpp"

#include <algorithm>
#include <sstream>

namespace pgph {

using nlohmann::json;

json to_json(const PersistenceMatrix& m) {
  return {{"group", m.group},         {"functor", to_string(m.functor)}, {"degree", m.degree},
          {"termOrders", m.term_orders}, {"matrix", m.entries}};
}

json to_json(const IntegralPersistenceMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j < i) {
        row.push_back(nullptr);
        continue;
      }
      const auto& t = m.entries[i][j];
      row.push_back({{"A", t.source}, {"B", t.target}, {"C", t.cokernel}});
    }
    rows.push_back(std::move(row));
  }
  return {{"group", m.group},         {"functor", to_string(m.functor)}, {"degree", m.degree},
          {"termOrders", m.term_orders}, {"matrix", std::move(rows)}};
}

json to_json(const Barcode& b) {
  json bars = json::array();
  for (const auto& bar : b.bars)
    bars.push_back({{"birth", bar.birth}, {"death", bar.death}, {"multiplicity", bar.multiplicity}});
  return {{"degree", b.degree}, {"columns", b.columns}, {"bars", std::move(bars)}};
}

namespace {

json stats_json(const PartitionStats& s) { return {{"classes", s.classes}, {"maxClassSize", s.max_class_size}}; }

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const ClassificationReport& r) {
  json cumulative = json::array(), single = json::array();
  for (const auto& s : r.cumulative) cumulative.push_back(stats_json(s));
  for (const auto& s : r.single) single.push_back(stats_json(s));
  json out{{"functor", to_string(r.functor)},
           {"maxDegree", r.max_degree},
           {"integral", r.integral},
           {"partial", r.partial},
           {"classes", r.stats.classes},
           {"maxClassSize", r.stats.max_class_size},
           {"stableT", r.stable_t},
           {"strongestT", r.strongest_t},
           {"stableConfirmed", r.stable_confirmed},
           {"cumulative", std::move(cumulative)},
           {"single", std::move(single)},
           {"partition", r.classes},
           {"failures", r.failures}};
  if (r.single_degree > 0) {
    const auto& s = r.single[static_cast<std::size_t>(r.single_degree) - 1];
    out["singleDegree"] = {{"classes", s.classes}, {"maxClassSize", s.max_class_size}, {"degree", r.single_degree}};
  }
  return out;
}

json to_json(const TreePersistenceReport& r) {
  return {{"family", to_string(r.family)},
          {"degree", r.degree},
          {"levels", r.levels},
          {"homologyDims", r.homology_dims},
          {"imageDims", r.image_dims},
          {"intersectionDims", r.intersection_dims},
          {"stabilizationLevel", optional_json(r.stabilization_level)},
          {"stabilizedDim", optional_json(r.stabilized_dim)}};
}

json to_json(const SecondHomologyReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"level", e.level},
                       {"order", e.order},
                       {"h2", e.h2},
                       {"leaf", e.leaf},
                       {"relatorBound", e.relator_bound},
                       {"consistent", e.consistent}});
  return {{"family", to_string(r.family)},
          {"estimate", optional_json(r.estimate)},
          {"stabilizationLevel", optional_json(r.stabilization_level)},
          {"consistent", r.consistent()},
          {"entries", std::move(entries)}};
}

std::string render_text(const Barcode& b) {
  std::ostringstream os;
  os << "degree " << b.degree << ", " << b.columns << " columns, " << b.total() << " bars\n";
  for (const auto& bar : b.bars) os << '[' << bar.birth << ',' << bar.death << "] x " << bar.multiplicity << '\n';
  return os.str();
}

std::string render_svg(const Barcode& b) {
  constexpr int margin = 40, step = 60, row = 16, radius = 4;
  const int columns = static_cast<int>(b.columns);
  const int rows = static_cast<int>(b.total());
  const int width = 2 * margin + step * std::max(columns - 1, 1);
  const int axis_y = margin + row * std::max(rows, 1);
  const int height = axis_y + margin;
  auto x_of = [&](std::size_t col) { return margin + step * (static_cast<int>(col) - 1); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<g class=\"axes\" stroke=\"#888\">\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << axis_y << "\" x2=\"" << width - margin << "\" y2=\"" << axis_y
     << "\"/>\n";
  for (int c = 1; c <= columns; ++c)
    os << "<text x=\"" << x_of(static_cast<std::size_t>(c)) << "\" y=\"" << axis_y + 16
       << "\" text-anchor=\"middle\" font-size=\"11\">" << c << "</text>\n";
  os << "</g>\n<g class=\"bars\" fill=\"#000\" stroke=\"#000\">\n";
  int y = margin;
  for (const auto& bar : b.bars)
    for (std::size_t k = 0; k < bar.multiplicity; ++k, y += row) {
      const int x1 = x_of(bar.birth), x2 = x_of(bar.death);
      if (bar.birth == bar.death) {
        os << "<circle class=\"vertex\" cx=\"" << x1 << "\" cy=\"" << y << "\" r=\"" << radius << "\"/>\n";
        continue;
      }
      os << "<line class=\"bar\" x1=\"" << x1 << "\" y1=\"" << y << "\" x2=\"" << x2 << "\" y2=\"" << y
         << "\" stroke-width=\"2\"/>\n";
      os << "<circle class=\"endpoint\" cx=\"" << x1 << "\" cy=\"" << y << "\" r=\"" << radius << "\"/>\n";
      os << "<circle class=\"endpoint\" cx=\"" << x2 << "\" cy=\"" << y << "\" r=\"" << radius << "\"/>\n";
    }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace pgph
