// Runs AC-1..AC-10 and prints one PASS/FAIL line per criterion.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qtwist/acceptance.hpp"

int main(int argc, char** argv) {
  qtwist::AcceptanceOptions opts;
  if (argc > 1) opts.only = argv[1];
  qtwist::Cache cache("");  // always recompute
  opts.cache = &cache;
  bool all = true;
  qtwist::run_acceptance(opts, [&](const qtwist::CriterionResult& r) {
    std::printf("%s %s (%.2fs): %s\n", r.id.c_str(), r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
    std::fflush(stdout);
    all = all && r.pass;
  });
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
