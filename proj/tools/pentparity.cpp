#include "pentparity/cli.hpp"

int main(int argc, char** argv) { return pentparity::cli::run(argc, argv); }
