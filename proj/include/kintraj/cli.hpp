#pragma once

// Batch front end. Exit-code contract: 0 when every requested check
// passes, 1 on check failure (the report is still written), 2 on usage or
// configuration errors.

#include <string>
#include <vector>

namespace kintraj {

int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

}  // namespace kintraj
