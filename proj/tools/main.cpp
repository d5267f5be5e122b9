#include "reebcube/cli.hpp"

int main(int argc, char** argv) { return reebcube::run_cli(argc, argv); }
