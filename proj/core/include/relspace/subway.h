#ifndef RELSPACE_SUBWAY_H_
#define RELSPACE_SUBWAY_H_

#include <string>
#include <vector>

#include "relspace/space.h"

namespace relspace {

// Kai Tak through Wu Kai Sha, twelve stations.
std::vector<std::string> tuen_ma_line();

// A scene over the stations of a line, in travel order.  Relations:
// station (every station), next_stop (box), in_between (state over three
// stations, the middle one strictly between the outer two) and, when
// `my_station` is non-empty, the noun my_station.  Throws kScene on
// duplicates or fewer than two stations.
Scene build_subway(const std::vector<std::string>& stations,
                   const std::string& my_station = "");

}  // namespace relspace

#endif  // RELSPACE_SUBWAY_H_
