#include <iostream>

#include "ribbonroots/cli.hpp"

int main(int argc, char** argv) {
    return ribbonroots::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
