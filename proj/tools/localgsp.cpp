#include "localgsp/cli.hpp"

int main(int argc, char** argv) { return localgsp::cli::run(argc, argv); }
