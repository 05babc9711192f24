#include <iostream>

#include "sympv/cli.hpp"

int main(int argc, char** argv) {
    return sympv::run_cli(argc, argv, std::cout, std::cerr);
}
