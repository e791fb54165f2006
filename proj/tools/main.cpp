#include "ngas/cli.hpp"

int main(int argc, char** argv) { return ngas::cli::run(argc, argv); }
