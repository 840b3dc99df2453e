#ifndef RELSPACE_DIAGRAM_JSON_H_
#define RELSPACE_DIAGRAM_JSON_H_

#include <string>

#include "relspace/diagram.h"

namespace relspace {

// Serialized form:
//   {"carriers": [{"name", "labels"}],
//    "boundary": [{"side": "dom"|"cod", "port", "carrier"}],
//    "nodes":    [{"kind", "name", "inputs", "outputs", "rows"}],
//    "edges":    [{"from": {"node", "port"}, "to": {"node", "port"}}]}
// Ports refer to carriers by name; node -1 is the boundary.  State rows are
// written as label arrays.  Carriers sharing a name must be identical.
std::string diagram_to_json(const Diagram& d, int indent = 2);
Diagram diagram_from_json(const std::string& text);

}  // namespace relspace

#endif  // RELSPACE_DIAGRAM_JSON_H_
