#include <poset_ramsey/cli.hpp>

int main(int argc, char** argv) { return poset_ramsey::cli::run(argc, argv); }
