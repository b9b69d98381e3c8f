#include "bead/cli.hpp"

int main(int argc, char** argv) { return bead::run(argc, argv); }
