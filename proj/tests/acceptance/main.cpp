// Runs the full acceptance battery and prints one PASS/FAIL line per
// criterion. Exit status 0 iff all pass.

#include <cstdlib>
#include <iostream>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  torelli::suite::Options opt;
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
  if (const char* c = std::getenv("TORELLI_CACHE_DIR")) opt.cache_dir = c;
  opt.on_result = [](const torelli::suite::CriterionResult& r) {
    std::cout << torelli::suite::line(r) << "  [" << r.seconds << " s]" << std::endl;
  };
  const auto rep = torelli::suite::run_acceptance(opt);
  std::cout << (rep.all_pass ? "ALL PASS" : "SOME FAILED") << " in " << rep.seconds << " s" << std::endl;
  return rep.all_pass ? 0 : 1;
}
