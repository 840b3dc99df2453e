#ifndef RELSPACE_SPACE_H_
#define RELSPACE_SPACE_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "relspace/carrier.h"
#include "relspace/diagram.h"
#include "relspace/relation.h"

namespace relspace {

// Product-size bound for spaces; RELSPACE_MAX_SPACE overrides the default.
constexpr std::size_t kDefaultMaxSpace = 1'000'000;
std::size_t max_space_size();
// Throws kSizeBound when `n` exceeds max_space_size().
void check_space_size(std::size_t n, const std::string& what);

// An ordered product of finite factors.  A noun bundle is one wire per
// factor.
struct Space {
  std::string name;
  PortType factors;

  std::size_t size() const { return factors.cardinality(); }
  // Position of the factor with this carrier name.
  std::size_t factor_index(const std::string& carrier_name) const;
};

Space augment(const Space& space, const CarrierPtr& feature);

// Extends a relation between the first factors of a space to the whole
// bundle, leaving every other factor unconstrained on both sides.  `r` must
// be a box whose dom and cod are the leading factors.
Relation widen(const Relation& r, const Space& space);
// Same for a state over the leading factors.
Relation widen_state(const Relation& state, const Space& space);

// A space with its registered relations and named inhabitants.
struct Scene {
  std::string kind;  // chess, subway, penrose, grid
  Space space;
  // Noun states are states over the bundle; binary relations are boxes
  // bundle -> bundle; other arities are states.
  std::map<std::string, Relation> relations;
  // Inhabitants in declaration order, each with its initial state.
  std::vector<std::string> inhabitant_names;
  std::map<std::string, Relation> inhabitants;
  // Factors shown when rendering an element.
  std::vector<std::size_t> label_factors = {0};
  // Chess only: square label -> FEN letter.
  std::map<std::string, char> board;

  PortType noun() const { return space.factors; }
  const Relation& relation(const std::string& name) const;
  bool has_inhabitant(const std::string& name) const;
  void add_inhabitant(const std::string& name);
  void add_inhabitant(const std::string& name, Relation state);
  Environment environment() const;

  // Rendered label of a bundle tuple.
  std::string element_label(std::span<const Index> tuple) const;
  // Distinct labels of the rows of a state over the bundle, in row order.
  std::vector<std::string> element_labels(const Relation& state) const;
};

}  // namespace relspace

#endif  // RELSPACE_SPACE_H_
