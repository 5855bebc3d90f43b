#include <iostream>

#include "fixhorn/cli/cli.hpp"

int main(int argc, char** argv) {
    return fixhorn::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
