// Release gate: runs every criterion at its pinned tolerance and prints one
// pass/fail line per criterion. Exit status is nonzero if any fails.

#include <cstdio>

#include "fpm/acceptance.hpp"

int main() {
  const auto results = fpm::acceptance::run_all();
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("%s criterion %d: %s (%.2fs) - %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
