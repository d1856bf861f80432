#include "signed_index/cli.hpp"

int main(int argc, char** argv) { return signed_index::cli::run(argc, argv); }
