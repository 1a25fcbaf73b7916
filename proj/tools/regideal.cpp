#include <string>
#include <vector>

#include "regideal/cli.hpp"

int main(int argc, char** argv) {
    return regideal::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
