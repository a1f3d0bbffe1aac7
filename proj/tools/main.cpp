#include <iostream>

#include <dlrev/cli.hpp>

int main(int argc, char **argv)
{
    return dlrev::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
