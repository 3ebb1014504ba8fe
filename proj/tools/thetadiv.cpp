#include <iostream>
#include <string>
#include <vector>

#include "thetadiv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return thetadiv::cli::main_entry(args, std::cout, std::cerr);
}
