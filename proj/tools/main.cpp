#include "qstbell/cli.hpp"

int main(int argc, char** argv) { return qstbell::cli::run_main(argc, argv); }
