#include "fanchar/cli/cli.hpp"

int main(int argc, char** argv) { return fanchar::cli_main(argc, argv); }
