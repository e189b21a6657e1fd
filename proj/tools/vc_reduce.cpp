#include "vcbr/cli.hpp"

int main(int argc, char** argv) { return vcbr::run_cli(argc, argv); }
