#include "oscover/cli.hpp"

int main(int argc, char** argv) { return oscover::run_main(argc, argv); }
