#include "app.hpp"

int main(int argc, char** argv) { return gsm::cli::run_command(argc, argv); }
