#include "bouquet/cli.hpp"

int main(int argc, char** argv) { return bouquet::cli::run(argc, argv); }
