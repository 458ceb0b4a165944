// Scans a rectangle of the complex plane and prints the points whose
// cos or sin iteral stays bounded. Example:
//      iteral_julia_set -2.5 -2.5 2.5 2.5 500 cos > f.txt
// then in gnuplot:
//      plot "f.txt" with dots
#include "iteral/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char* argv[])
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return iteral::cli::run_legacy(args, argv[0], std::cout, std::cerr);
}
