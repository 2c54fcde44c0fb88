#include <iostream>
#include <vector>

#include "darboux3/climain.hpp"

int main(int argc, char** argv) {
    return dbx::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
