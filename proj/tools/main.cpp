#include "rotdirac/cli.hpp"

int main(int argc, char** argv) { return rotdirac::cli::main_entry(argc, argv); }
