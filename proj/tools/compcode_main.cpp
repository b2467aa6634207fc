#include <iostream>
#include <string>
#include <vector>

#include "compcode/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return compcode::cli::run(args, std::cout, std::cerr);
}
