#include <iostream>
#include <string>
#include <vector>

#include "lenscape/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lenscape::dispatch(args, std::cin, std::cout, std::cerr);
}
