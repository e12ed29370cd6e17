#include <iostream>
#include <string>
#include <vector>

#include "ccm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ccm::run_cli(args, std::cout, std::cerr);
}
