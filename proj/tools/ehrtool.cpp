#include "ehrhart/cli.hpp"

int main(int argc, char** argv) { return ehrhart::cli::run_main(argc, argv); }
