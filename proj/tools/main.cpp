#include <vector>

#include "gorcode/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gorcode::run_cli(args);
}
