#include <string>
#include <vector>

#include "primecomp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return primecomp::cli_run(args);
}
