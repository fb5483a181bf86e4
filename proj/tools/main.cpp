#include "cli.hpp"

#include <iostream>
#include <sstream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string input;
    if (!args.empty() && args.front() == "poset") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        input = buffer.str();
    }
    ordlen::cli::RunResult result = ordlen::cli::run(args, input);
    std::cout << result.out;
    std::cerr << result.err;
    return result.code;
}
