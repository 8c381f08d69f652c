#include "pauliflow/io.hpp"

#include <iostream>

int main(int argc, char** argv) { return pauliflow::cli_main(argc, argv, std::cout, std::cerr); }
