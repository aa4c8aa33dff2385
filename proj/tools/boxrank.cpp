#include <boxrank/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
    return boxrank::cli::run(argc, argv, std::cout, std::cerr);
}
