#include <iostream>
#include "wumetric/verify.hpp"
int main() {
  auto results = wu::verify::run_paper_verification();
  wu::verify::print_table(results, std::cout);
  return wu::verify::all_passed(results) ? 0 : 1;
}
