#ifndef RELSPACE_SCENE_IO_H_
#define RELSPACE_SCENE_IO_H_

#include <string>

#include "relspace/space.h"

namespace relspace {

// Scene document:
//   {"space": {"kind": "chess", "fen": "..."}
//           | {"kind": "subway", "stations": [...], "my_station": "..."}
//           | {"kind": "penrose", "n": 5}
//           | {"kind": "grid", "axes": [{"name": "x", "range": [0, 4]}, ...],
//              "resolution": "1", "time_resolution": "60",
//              "features": [{"name", "labels"?, "values"?}]},
//    "relations":   [{"name", "builtin", ...params} | {"name", "converse"}],
//    "regions":     [{"name", "box": {"x": [lo, hi], ...}} | {"name", "members"}],
//    "nouns":       [{"name", "members": [member, ...]}],
//    "inhabitants": [{"name", "state": [member, ...]?}]}
// A member is a label of the first factor, or an object from factor names
// to labels with missing factors unconstrained.  Grid builtins:
// higher_than, above, close_to (metres), in_between, chases (seconds),
// chases_any, inside, can_capture (hunt), feature (feature, labels).
// Elsewhere a builtin names an already registered relation.
//
// Text that is not a JSON object is read as a FEN piece placement.
// Every failure is reported as kScene or kSizeBound.
Scene load_scene(const std::string& text);
Scene load_scene_file(const std::string& path);

}  // namespace relspace

#endif  // RELSPACE_SCENE_IO_H_
