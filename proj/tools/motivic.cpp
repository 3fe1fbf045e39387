#include <iostream>
#include <string>
#include <vector>

#include <motivic/cli.hpp>

int main(int argc, char **argv)
{
    const std::vector<std::string> args(argv, argv + argc);
    return motivic::cli::run(args, std::cout, std::cerr);
}
