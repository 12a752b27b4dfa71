#include "hitchin/cli.hpp"

int main(int argc, char** argv) { return hitchin::cli::run(argc, argv); }
