#include "psmod_cli/cli.hpp"

int main(int argc, char** argv) { return psmod::cli::run_main(argc, argv); }
