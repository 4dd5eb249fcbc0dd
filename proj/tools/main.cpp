#include "tp/cli.hpp"

int main(int argc, char** argv) { return tp::cli::run_cli(argc, argv); }
