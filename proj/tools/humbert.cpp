#include <iostream>

#include "humbert/cli.hpp"

int main(int argc, char** argv)
{
    return humbert::cli::run(argc, argv, std::cout, std::cerr);
}
