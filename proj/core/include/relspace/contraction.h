#ifndef RELSPACE_CONTRACTION_H_
#define RELSPACE_CONTRACTION_H_

#include <cstddef>
#include <span>
#include <vector>

#include "relspace/carrier.h"
#include "relspace/relation.h"

namespace relspace {

// A conjunction of relational constraints over finitely-valued variables.
//
// This is how string diagrams are evaluated without materializing the
// parallel layers: every wire becomes a variable, every box a constraint on
// the variables of its ports, and spiders (caps, cups, copies, merges) simply
// identify variables.  solve() existentially eliminates everything outside
// `keep` by repeated join-and-project, always joining the smallest table
// with its smallest neighbour first.
class FactorGraph {
 public:
  using Var = std::size_t;

  Var add_variable(CarrierPtr carrier);
  std::size_t variable_count() const { return carriers_.size(); }
  const CarrierPtr& carrier(Var v) const { return carriers_.at(v); }

  // Column i of `rel` (dom columns first, then cod) constrains vars[i].
  // Variables may repeat; their values are then required to be equal.
  void add_factor(std::vector<Var> vars, const Relation& rel);

  // Identifies two variables.  Throws kTypeMismatch on differing carriers.
  void merge(Var a, Var b);

  // All assignments satisfying every factor, as a state over the carriers
  // of `keep` (which may list a variable more than once).
  Relation solve(std::span<const Var> keep) const;

  bool satisfiable() const;

 private:
  struct Factor {
    std::vector<Var> vars;
    std::vector<Index> cells;
    std::size_t rows;
  };

  Var find(Var v) const;

  std::vector<CarrierPtr> carriers_;
  mutable std::vector<Var> parent_;
  std::vector<Factor> factors_;
};

}  // namespace relspace

#endif  // RELSPACE_CONTRACTION_H_
