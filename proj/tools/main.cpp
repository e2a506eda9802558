#include "cavsim/cli.hpp"

int main(int argc, char** argv) {
    return cavsim::cli::run_cli(argc, argv);
}
