#include "nicomach/cli.hpp"

int main(int argc, char** argv) {
    return nicomach::execute(std::vector<std::string>(argv + 1, argv + argc));
}
