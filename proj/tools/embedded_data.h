#ifndef RELSPACE_TOOLS_EMBEDDED_DATA_H_
#define RELSPACE_TOOLS_EMBEDDED_DATA_H_

#include <string>

namespace relspace::cli {

// Contents of data/<name> as of the build.
const std::string& embedded(const std::string& name);

}  // namespace relspace::cli

#endif  // RELSPACE_TOOLS_EMBEDDED_DATA_H_
