#include <vector>

#include "ctconfig/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return ctconfig::cli::run(args);
}
