#include "srct/cli.hpp"

int main(int argc, char** argv) { return srct::cli::run(argc, argv, std::cout, std::cerr); }
