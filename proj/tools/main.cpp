#include "gatecalc/cli.hpp"

int main(int argc, char **argv)
{ return gatecalc::cli::run(argc, argv); }
