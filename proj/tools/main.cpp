#include "trademood/cli.hpp"

int main(int argc, char** argv) {
    return trademood::cli_main(std::vector<std::string>(argv + 1, argv + argc));
}
