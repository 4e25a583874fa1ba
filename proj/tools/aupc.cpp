#include "aupc/app/cli.hpp"

int main(int argc, char** argv) { return aupc::run_cli(argc, argv); }
