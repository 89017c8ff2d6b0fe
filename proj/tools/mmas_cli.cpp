#include "mmas/cli.hpp"

int main(int argc, char** argv) { return mmas::cli_main(argc, argv); }
