#include "kfill/harness.hpp"
int main(int argc, char** argv) { return kfill::cli_dispatch(argc, argv); }
