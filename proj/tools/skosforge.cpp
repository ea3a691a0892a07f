#include <unistd.h>

#include <iostream>

#include "skosforge/report.hpp"

int main(int argc, char** argv) {
    return skosforge::main_entry(argc, argv, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
