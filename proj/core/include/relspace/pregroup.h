#ifndef RELSPACE_PREGROUP_H_
#define RELSPACE_PREGROUP_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relspace/diagram.h"

namespace relspace {

enum class Basic { kN, kS };

// A basic type with an adjoint order: 0 plain, -k for k left marks (written
// -1x, cancels against x on its left), +k for k right marks (x-1, cancels
// against x on its right).
struct SimpleType {
  Basic basic = Basic::kN;
  int order = 0;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

using PregroupType = std::vector<SimpleType>;

// Text form: elements joined by '.', each `(-1)* basic (-1)*`, with basic
// one of n, s.  Examples: "n", "-1n.s.n-1", "-1n.n.n-1-1.s-1".  An element
// carries marks on one side only.
PregroupType parse_type(std::string_view text);
std::string to_string(const SimpleType& t);
std::string to_string(const PregroupType& t);

// Whether `left right` reduces to the empty type.
bool cancels(const SimpleType& left, const SimpleType& right);

struct Parse {
  PregroupType flat;  // the word types concatenated
  std::vector<std::size_t> word_of;  // flat position -> word index
  std::vector<std::pair<std::size_t, std::size_t>> links;  // left < right
  std::vector<std::size_t> residual;  // unlinked positions, left to right
};

// Finds a planar cancellation of the concatenated types whose residual is
// `target`.  Positions are scanned left to right; each is linked to the
// nearest partner that leaves a reducible interior, otherwise kept as the
// next residual element, backtracking on failure.  Throws kNoParse.
Parse reduce(const std::vector<PregroupType>& types,
             const PregroupType& target);

// Checks that links are non-crossing, cancellable, and cover everything
// outside the residual.
bool is_valid_parse(const Parse& p);

// Cups for every link and plain wires for the residual.  `element_types`
// gives the bundle of each flat position; linked bundles must agree.
Diagram grammar_diagram(const Parse& p,
                        const std::vector<PortType>& element_types);

}  // namespace relspace

#endif  // RELSPACE_PREGROUP_H_
