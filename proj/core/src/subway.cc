#include "relspace/subway.h"

#include <set>

#include "relspace/error.h"

namespace relspace {

std::vector<std::string> tuen_ma_line() {
  return {"Kai Tak",  "Diamond Hill",  "Hin Keng", "Tai Wai",
          "Che Kung Temple", "Sha Tin Wai", "City One", "Shek Mun",
          "Tai Shui Hang", "Heng On", "Ma On Shan", "Wu Kai Sha"};
}

Scene build_subway(const std::vector<std::string>& stations,
                   const std::string& my_station) {
  if (stations.size() < 2) {
    throw Error(ErrorCode::kScene, "a line needs at least two stations");
  }
  if (std::set<std::string>(stations.begin(), stations.end()).size() !=
      stations.size()) {
    throw Error(ErrorCode::kScene, "duplicate station");
  }
  const CarrierPtr st = make_carrier("station", stations);
  const Index n = static_cast<Index>(stations.size());
  Scene scene;
  scene.kind = "subway";
  scene.space = Space{"line", {st}};
  scene.relations.emplace("station", unknown(st));

  RelationBuilder next({st}, {st});
  for (Index i = 0; i + 1 < n; ++i) next.add({i, i + 1});
  scene.relations.emplace("next_stop", std::move(next).build());

  RelationBuilder between({}, {st, st, st});
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if ((a < b && b < c) || (c < b && b < a)) between.add({a, b, c});
      }
    }
  }
  scene.relations.emplace("in_between", std::move(between).build());

  if (!my_station.empty()) {
    auto idx = st->find(my_station);
    if (!idx) throw Error(ErrorCode::kScene, "unknown station " + my_station);
    scene.relations.emplace("my_station",
                            Relation::from_cells({}, {st}, {*idx}));
  }
  return scene;
}

}  // namespace relspace
