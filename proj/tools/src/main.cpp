#include "griemlab_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return griemlab::cli::run(argc, argv, std::cout, std::cerr); }
