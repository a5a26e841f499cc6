// Prints one PASS/FAIL line per acceptance criterion; optional arguments pick
// criteria by number.
#include <iostream>
#include <string>

#include "criteria.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
  auto outcomes = xturan::acceptance::run_suite(std::cout, ids);
  int failed = 0;
  for (auto& o : outcomes) failed += !o.pass;
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << outcomes.size() - failed << "/" << outcomes.size() << std::endl;
  return failed ? 1 : 0;
}
