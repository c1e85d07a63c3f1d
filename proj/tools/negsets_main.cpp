#include "negsets/cli.hpp"

int main(int argc, char** argv) { return negsets::cli::run(argc, argv); }
