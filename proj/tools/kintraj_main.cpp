#include "kintraj/cli.hpp"

int main(int argc, char** argv) { return kintraj::run_cli(argc, argv); }
