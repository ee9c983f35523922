#include "latspar/cli.hpp"

int main(int argc, char** argv) { return latspar::run_cli(argc, argv); }
