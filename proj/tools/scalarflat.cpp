#include "scalarflat/cli.hpp"

int main(int argc, char** argv) { return scalarflat::cli::run(argc, argv); }
