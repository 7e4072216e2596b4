#include <string>
#include <vector>

#include "vt_cli.hpp"

int main(int argc, char** argv) {
  return vt::cli::cli_main(std::vector<std::string>(argv + 1, argv + argc));
}
