#include "twotemp/cli.hpp"

int main(int argc, char** argv) { return twotemp::run(argc, argv); }
