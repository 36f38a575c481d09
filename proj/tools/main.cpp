#include "cli.hpp"

int main(int argc, char** argv) { return superlie::cli::run(argc, argv); }
