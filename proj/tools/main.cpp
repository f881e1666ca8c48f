#include <iostream>

#include "clustered/cli.hpp"

int main(int argc, char** argv)
{
    return clustered::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
