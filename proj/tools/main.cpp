#include "ctqw/run.hpp"

int main(int argc, char** argv) { return ctqw::run_cli(argc, argv); }
