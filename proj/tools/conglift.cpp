#include "cli/app.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return conglift::cli::run(std::vector<std::string>(argv, argv + argc), std::cout);
}
