#include "shgbeta/cli.hpp"

int main(int argc, char** argv) { return shgbeta::cli::run(argc, argv); }
