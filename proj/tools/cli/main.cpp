#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return figulat::cli::run(args, std::cout, std::cerr, figulat::cli::Environment::from_process());
}
