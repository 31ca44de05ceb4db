#include "graph_euler/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return graph_euler::cli::run_cli(argc, argv, std::cout, std::cerr);
}
