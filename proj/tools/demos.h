#ifndef RELSPACE_TOOLS_DEMOS_H_
#define RELSPACE_TOOLS_DEMOS_H_

#include <ostream>
#include <string>
#include <vector>

namespace relspace::cli {

std::vector<std::string> demo_names();

// Runs a scripted scenario, printing expected and computed values.
// Returns whether everything matched.  Throws kInvalidArgument for an
// unknown name.
bool run_demo(const std::string& name, std::ostream& out);

}  // namespace relspace::cli

#endif  // RELSPACE_TOOLS_DEMOS_H_
