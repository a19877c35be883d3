#include "charid/driver.hpp"

int main(int argc, char** argv) { return charid::cli_main(argc, argv); }
