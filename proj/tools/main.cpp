#include <string>
#include <vector>

#include "toppcomb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return toppcomb::run_cli(args);
}
