#include "oneplanar/cli.hpp"

int main(int argc, char** argv) { return oneplanar::main_entry(argc, argv); }
