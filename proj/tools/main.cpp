#include "carrychain/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <unistd.h>

int main(int argc, char** argv) {
    carrychain::cli::Options opts;
    opts.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
    return carrychain::cli::run({argv + 1, argv + argc}, std::cout, std::cerr, opts);
}
