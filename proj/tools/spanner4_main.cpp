#include <string>
#include <vector>

#include "spanner4/cli.hpp"

int main(int argc, char** argv) {
    return spanner4::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
