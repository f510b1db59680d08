#include <iostream>
#include <string>
#include <vector>

#include "pqovs/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv + 1, argv + argc);
    return pqovs::cli::main_entry(args, std::cin, std::cout, std::cerr);
}
