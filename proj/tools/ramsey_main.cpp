#include "ramsey/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ramsey::cli_run(args, std::cin, std::cout, std::cerr);
}
