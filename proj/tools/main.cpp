#include <iostream>
#include <string>
#include <vector>

#include "valleypaths/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return valleypaths::cli::run(args, std::cout, std::cerr);
}
