#include "fairkit/cli.hpp"

int main(int argc, char** argv) { return fairkit::cli::run(argc, argv); }
