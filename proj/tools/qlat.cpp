#include "qlat/cli/dispatch.hpp"

#include <iostream>

int main(int argc, char **argv) {
    return qlat::cli::dispatch({argv + 1, argv + argc}, std::cout, std::cerr);
}
