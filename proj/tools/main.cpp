#include "adaptfir/cli.hpp"

int main(int argc, char** argv) { return adaptfir::cli_main(argc, argv); }
