#include <iostream>

#include "hlb/cli.hpp"

int main(int argc, char** argv)
{
    return hlb::cli::run(argc, argv, std::cout, std::cerr);
}
