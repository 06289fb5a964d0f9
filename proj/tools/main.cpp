#include <iostream>
#include <string>
#include <vector>

#include "motive/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return motive::cli::run(args, std::cout, std::cerr);
}
