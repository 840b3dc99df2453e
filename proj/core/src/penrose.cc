#include "relspace/penrose.h"

#include "relspace/error.h"

namespace relspace {

Scene build_penrose(int n) {
  if (n < 1) throw Error(ErrorCode::kScene, "a flight needs at least one step");
  static const char* const kFlights[] = {"I", "II", "III", "IV"};
  std::vector<std::string> labels;
  for (const char* flight : kFlights) {
    for (int s = 1; s <= n; ++s) labels.push_back(flight + std::to_string(s));
  }
  const CarrierPtr steps = make_carrier("step", std::move(labels));
  const Index total = static_cast<Index>(4 * n);
  Scene scene;
  scene.kind = "penrose";
  scene.space = Space{"staircase", {steps}};
  RelationBuilder up({steps}, {steps});
  for (Index i = 0; i < total; ++i) up.add({i, (i + 1) % total});
  Relation move_up = std::move(up).build();
  scene.relations.emplace("move_down", converse(move_up));
  scene.relations.emplace("move_up", std::move(move_up));
  return scene;
}

}  // namespace relspace
