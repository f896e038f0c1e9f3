#include "phasediff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return phasediff::cli::dispatch(args);
}
