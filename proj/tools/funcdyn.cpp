#include "funcdyn/cli.hpp"

int main(int argc, char** argv) { return funcdyn::run(funcdyn::parse_args(argc, argv)); }
