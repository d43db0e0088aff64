#include <iostream>
#include <string>
#include <vector>

#include "partosc/cli/run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return partosc::cli::run(args, std::cout, std::cerr);
}
