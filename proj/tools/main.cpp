#include "neatflow/cli.hpp"

int main(int argc, char** argv) { return neatflow::cli_main(argc, argv); }
