#include <iostream>
#include <string>
#include <vector>

#include "fracnabla/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fracnabla::run(args, std::cout, std::cerr);
}
