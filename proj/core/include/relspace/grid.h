#ifndef RELSPACE_GRID_H_
#define RELSPACE_GRID_H_

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "relspace/space.h"

namespace relspace {

using Rational = boost::rational<long long>;

// Accepts "3", "-2", "1/3" and "2.5".  Throws kInvalidArgument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

struct Axis {
  std::string name;  // "z" is height, "t" is time; others are planar
  int lo = 0;
  int hi = 0;  // inclusive
};

// A feature factor.  Numeric features carry one value per label.
struct Feature {
  std::string name;
  std::vector<std::string> labels;
  std::vector<Rational> values;  // empty for categorical features
};

struct GridSpec {
  std::vector<Axis> axes;
  Rational resolution{1};       // metres per step on spatial axes
  Rational time_resolution{1};  // seconds per step on t
  std::vector<Feature> features;
};

// A bounded integer grid.  Points form one carrier "point" labelled
// "(x,y,z)" (or with more coordinates) in lexicographic order; features
// follow as further factors of the bundle.
//
// Binary relations are boxes from the reference (object) to the head, so
// applying higher_than to a point gives the points higher than it.  Every
// relation is widened over factors it does not mention.
class Grid {
 public:
  explicit Grid(GridSpec spec);

  const GridSpec& spec() const { return spec_; }
  const CarrierPtr& points() const { return points_; }
  const Space& space() const { return space_; }

  std::optional<std::size_t> find_axis(std::string_view name) const;
  const std::vector<int>& coords(Index p) const { return coords_[p]; }
  Index point(std::span<const int> coords) const;
  std::string point_label(std::span<const int> coords) const;
  std::size_t feature_factor(std::string_view name) const;

  // Strictly greater height.
  Relation higher_than() const;
  // Same position apart from height, strictly greater height.
  Relation above() const;
  // Same height and time, planar distance at most `metres`.
  Relation close_to(const Rational& metres) const;
  // State (a, b, c): b lies strictly inside the segment from a to c.
  Relation in_between() const;
  // Chaser -> chased: same place, the chaser there `seconds` later.
  // Throws kInvalidArgument when not a whole number of time steps.
  Relation chases(const Rational& seconds) const;
  // Same place, the chaser there at some later time.
  Relation chases_any() const;
  // Points with every listed axis inside its inclusive range.
  Relation region(const std::map<std::string, std::pair<int, int>>& box) const;
  // Points listed by label.
  Relation region(const std::vector<std::string>& members) const;
  // Feature equal to one of the labels.
  Relation feature_state(std::string_view feature,
                         const std::vector<std::string>& labels) const;
  // Container -> contained over (point, radius): both radii positive,
  // centre distance below the radius difference.
  Relation inside_extent() const;
  // inside_extent() on the whole bundle.  Needs a numeric "radius" feature
  // as the first feature; the remaining features of container and
  // contained are left free.
  Relation inside() const;
  // Hunter -> prey.  Needs numeric "endurance" (seconds) and "speed"
  // (km/h) features.  The prey's head start d is covered when
  // d < e_h s_h - min(e_p, e_h) s_p.
  Relation can_capture_hunt() const;

  // A scene with no relations registered yet.
  Scene scene() const;

 private:
  Relation point_relation(
      const std::function<bool(const std::vector<int>&,
                               const std::vector<int>&)>& pred) const;
  const Feature& numeric_feature(std::string_view name) const;
  // Squared distance over the spatial axes, in grid steps.
  long long planar_dist2(const std::vector<int>& a, const std::vector<int>& b,
                         bool include_z) const;

  GridSpec spec_;
  CarrierPtr points_;
  Space space_;
  std::vector<std::vector<int>> coords_;
  std::optional<std::size_t> z_, t_;
};

}  // namespace relspace

#endif  // RELSPACE_GRID_H_
