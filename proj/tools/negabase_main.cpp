#include <iostream>

#include "negabase/cli.hpp"

int main(int argc, char** argv) {
  return negabase::cli::main_entry({argv + 1, argv + argc}, std::cout, std::cerr);
}
