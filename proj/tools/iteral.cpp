#include "iteral/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char* argv[])
{
    const std::vector<std::string> args(argv, argv + argc);
    return iteral::cli::run(args, std::cout, std::cerr);
}
