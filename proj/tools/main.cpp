#include <iostream>
#include <string>
#include <vector>

#include "kq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kq::cli_run(args, std::cout);
}
