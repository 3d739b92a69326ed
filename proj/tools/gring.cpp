#include <string>
#include <vector>

#include "gring/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gring::run_cli(args);
}
