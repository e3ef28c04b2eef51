#pragma once

#include <string>
#include <vector>

namespace toppcomb {

// Runs the command-line front end; args excludes the program name.
// Exit status: 0 success, 1 verification failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args);

}
