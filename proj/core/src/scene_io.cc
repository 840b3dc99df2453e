#include "relspace/scene_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "relspace/chess.h"
#include "relspace/error.h"
#include "relspace/grid.h"
#include "relspace/penrose.h"
#include "relspace/subway.h"

namespace relspace {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kScene, "scene: " + what);
}

Rational rational_param(const json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing parameter '") + key + "'");
  const json& v = j.at(key);
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  bad(std::string("parameter '") + key + "' must be an integer or a string");
}

GridSpec grid_spec(const json& s) {
  GridSpec g;
  for (const auto& a : s.at("axes")) {
    auto range = a.at("range").get<std::vector<int>>();
    if (range.size() != 2) bad("axis range needs [lo, hi]");
    g.axes.push_back(Axis{a.at("name").get<std::string>(), range[0], range[1]});
  }
  if (s.contains("resolution")) g.resolution = rational_param(s, "resolution");
  if (s.contains("time_resolution")) {
    g.time_resolution = rational_param(s, "time_resolution");
  }
  for (const auto& f : s.value("features", json::array())) {
    Feature feat;
    feat.name = f.at("name").get<std::string>();
    if (f.contains("values")) {
      for (const auto& v : f.at("values")) {
        Rational q = v.is_string() ? parse_rational(v.get<std::string>())
                                   : Rational(v.get<long long>());
        feat.values.push_back(q);
        feat.labels.push_back(to_string(q));
      }
    }
    if (f.contains("labels")) {
      feat.labels = f.at("labels").get<std::vector<std::string>>();
    }
    g.features.push_back(std::move(feat));
  }
  return g;
}

// Rows of the bundle matching every member spec.
Relation members_state(const Space& space, const json& members) {
  const PortType& factors = space.factors;
  RelationBuilder b({}, factors);
  for (const auto& m : members) {
    std::vector<std::optional<Index>> fixed(factors.size());
    if (m.is_string()) {
      fixed[0] = factors[0]->index_of(m.get<std::string>());
    } else if (m.is_object()) {
      for (const auto& [key, value] : m.items()) {
        fixed[space.factor_index(key)] =
            factors[space.factor_index(key)]->index_of(value.get<std::string>());
      }
    } else {
      bad("member must be a label or an object");
    }
    std::vector<Index> row(factors.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (fixed[i]) row[i] = *fixed[i];
    }
    // Odometer over the free factors.
    while (true) {
      bool empty = false;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (!fixed[i] && factors[i]->empty()) empty = true;
      }
      if (empty) break;
      b.add(row);
      std::size_t i = row.size();
      while (i-- > 0) {
        if (fixed[i]) continue;
        if (++row[i] < factors[i]->size()) break;
        row[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  return std::move(b).build();
}

Relation grid_builtin(const Grid& grid, const std::string& name,
                      const json& params) {
  if (name == "higher_than") return grid.higher_than();
  if (name == "above") return grid.above();
  if (name == "close_to") return grid.close_to(rational_param(params, "metres"));
  if (name == "in_between") return grid.in_between();
  if (name == "chases") return grid.chases(rational_param(params, "seconds"));
  if (name == "chases_any") return grid.chases_any();
  if (name == "inside") return grid.inside();
  if (name == "can_capture") return grid.can_capture_hunt();
  if (name == "feature") {
    return grid.feature_state(
        params.at("feature").get<std::string>(),
        params.at("labels").get<std::vector<std::string>>());
  }
  bad("unknown grid builtin '" + name + "'");
}

Scene build(const json& j) {
  const json& s = j.at("space");
  const std::string kind = s.at("kind").get<std::string>();
  Scene scene;
  std::optional<Grid> grid;
  if (kind == "chess") {
    std::vector<Piece> pieces;
    if (s.contains("fen")) pieces = parse_fen(s.at("fen").get<std::string>());
    scene = build_chess(pieces);
  } else if (kind == "subway") {
    auto stations = s.contains("stations")
                        ? s.at("stations").get<std::vector<std::string>>()
                        : tuen_ma_line();
    scene = build_subway(stations, s.value("my_station", std::string()));
  } else if (kind == "penrose") {
    scene = build_penrose(s.at("n").get<int>());
  } else if (kind == "grid") {
    grid.emplace(grid_spec(s));
    scene = grid->scene();
  } else {
    bad("unknown space kind '" + kind + "'");
  }

  for (const auto& r : j.value("regions", json::array())) {
    if (!grid) bad("regions need a grid space");
    const auto name = r.at("name").get<std::string>();
    if (r.contains("box")) {
      std::map<std::string, std::pair<int, int>> box;
      for (const auto& [axis, range] : r.at("box").items()) {
        auto v = range.get<std::vector<int>>();
        if (v.size() != 2) bad("region range needs [lo, hi]");
        box[axis] = {v[0], v[1]};
      }
      scene.relations.insert_or_assign(name, grid->region(box));
    } else {
      scene.relations.insert_or_assign(
          name, grid->region(r.at("members").get<std::vector<std::string>>()));
    }
  }
  for (const auto& n : j.value("nouns", json::array())) {
    scene.relations.insert_or_assign(n.at("name").get<std::string>(),
                                     members_state(scene.space, n.at("members")));
  }
  for (const auto& r : j.value("relations", json::array())) {
    const auto name = r.at("name").get<std::string>();
    if (r.contains("converse")) {
      scene.relations.insert_or_assign(
          name, converse(scene.relation(r.at("converse").get<std::string>())));
      continue;
    }
    const auto builtin = r.at("builtin").get<std::string>();
    Relation rel = grid ? grid_builtin(*grid, builtin, r)
                        : scene.relation(builtin);
    scene.relations.insert_or_assign(name, std::move(rel));
  }
  for (const auto& i : j.value("inhabitants", json::array())) {
    const auto name = i.at("name").get<std::string>();
    if (i.contains("state")) {
      scene.add_inhabitant(name, members_state(scene.space, i.at("state")));
    } else {
      scene.add_inhabitant(name);
    }
  }
  return scene;
}

}  // namespace

Scene load_scene(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) bad("empty scene");
  if (text[first] != '{') {
    const auto last = text.find_last_not_of(" \t\r\n");
    return build_chess(parse_fen(text.substr(first, last - first + 1)));
  }
  try {
    return build(json::parse(text));
  } catch (const json::exception& e) {
    bad(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSizeBound || e.code() == ErrorCode::kScene) {
      throw;
    }
    throw Error(ErrorCode::kScene, std::string("scene: ") + e.what());
  }
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_scene(ss.str());
}

}  // namespace relspace
