#include "bhc/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return bhc::run_cli(argc, argv, std::cout, std::cerr);
}
