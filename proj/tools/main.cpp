#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    rosa::cli::CliArgs args;
    if (auto code = rosa::cli::parse_args(argc, argv, args, std::cout, std::cerr)) return *code;
    return rosa::cli::run(args, std::cin, std::cout, std::cerr);
}
