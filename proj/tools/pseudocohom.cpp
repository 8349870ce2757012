#include <iostream>

#include "pseudocohom/cli.hpp"

int main(int argc, char** argv)
{
    return pseudocohom::run_cli(argc, argv, std::cout, std::cerr);
}
