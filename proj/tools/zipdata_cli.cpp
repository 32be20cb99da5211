#include "zipdata/cli.hpp"

int main(int argc, char** argv) { return zipdata::cli::run(argc, argv); }
