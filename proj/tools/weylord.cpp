#include <iostream>

#include "weylord/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    const auto result = weylord::cli::run(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
