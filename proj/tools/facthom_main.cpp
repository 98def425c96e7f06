#include "facthom/cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  facthom::cli::Environment env;
  const char* c = std::getenv("FACTHOM_COLOR");
  env.color = c ? std::strcmp(c, "0") != 0 : isatty(STDOUT_FILENO) != 0;
  std::ios::sync_with_stdio(false);
  return facthom::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr, env);
}
