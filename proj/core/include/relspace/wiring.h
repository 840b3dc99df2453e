#ifndef RELSPACE_WIRING_H_
#define RELSPACE_WIRING_H_

#include <cstddef>
#include <vector>

#include "relspace/diagram.h"
#include "relspace/relation.h"

namespace relspace {

// Update wiring of a verb.  `v` is a state over `arity` participant bundles
// of equal type, or for arity 2 also a box subject -> object.  The diagram
// maps the participants' prior to prior ∩ v: every participant wire is
// merged with the matching wire of v.
Diagram verb_wiring(const Relation& v, std::size_t arity);

// Single-participant special case of verb_wiring: prior ∩ a.
Diagram adjective_wiring(const Relation& a);

// Noun-phrase modifier for a box object -> head: (head, object) -> head,
// keeping the heads related to some object.
Diagram preposition_wiring(const Relation& r);

// `clause` has the gap bundle as its dom.  The result is a state: the part
// of `head` for which the clause is satisfiable, with the head wire copied
// into the gap.
Diagram relpron_wiring(const Relation& head, const Diagram& clause);

// Where the ports of a relation sit inside a wider port list.  Wires of
// `dom` and `cod` not named by the slots pass straight through, paired in
// order.
struct Layout {
  PortType dom;
  PortType cod;
  std::vector<std::size_t> dom_slots;  // r.dom wire i sits at dom[dom_slots[i]]
  std::vector<std::size_t> cod_slots;  // r.cod wire j sits at cod[cod_slots[j]]
};

Relation lift(const Relation& r, const Layout& layout);

}  // namespace relspace

#endif  // RELSPACE_WIRING_H_
