#include "ktypes/cli.hpp"

int main(int argc, char** argv) { return ktypes::cli_main(argc, argv); }
