#include <iostream>
#include <string>
#include <vector>

#include "coursewise/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return coursewise::cli::run(args, std::cout, std::cerr);
}
