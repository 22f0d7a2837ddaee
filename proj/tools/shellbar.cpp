#include "shellbar/cli.hpp"

int main(int argc, char** argv) { return shellbar::cli_main(argc, argv); }
