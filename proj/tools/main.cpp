#include "gftv/cli.hpp"

int main(int argc, char** argv) { return gftv::run_cli(argc, argv); }
