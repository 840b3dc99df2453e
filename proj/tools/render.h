#ifndef RELSPACE_TOOLS_RENDER_H_
#define RELSPACE_TOOLS_RENDER_H_

#include <string>
#include <vector>

#include "relspace/pipeline.h"
#include "relspace/space.h"

namespace relspace::cli {

enum class RenderFormat { kText, kJson };

// Eight rows, rank 8 first.  Each cell is a marker ('*' for squares in
// `marked`, else ' ') and the FEN letter or '.'.
std::string render_board(const Scene& scene,
                         const std::vector<std::string>& marked);

// Stations in order with '*' before the marked ones.
std::string render_line(const Scene& scene,
                        const std::vector<std::string>& marked);

// A phrase result: the residual elements, then a picture where the space
// has one.  Sentences also list what they say about each participant.
std::string render_meaning(const Scene& scene, const std::string& phrase,
                           const Meaning& m, RenderFormat format);

}  // namespace relspace::cli

#endif  // RELSPACE_TOOLS_RENDER_H_
