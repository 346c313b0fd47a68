#include "cubic27/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return cubic27::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
