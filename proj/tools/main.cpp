#include "closeval/cli.hpp"

int main(int argc, char** argv) { return closeval::cli_main(argc, argv); }
