#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "apery/cli.hpp"

int main(int argc, char** argv) {
    try {
        return apery::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << '\n';
        return 3;
    }
}
