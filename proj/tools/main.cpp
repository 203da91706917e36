#include "rhalton/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return rhalton::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
