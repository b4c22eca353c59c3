#ifndef FPM_ACCEPTANCE_HPP
#define FPM_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace fpm::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Run every release criterion with its pinned tolerances and seeds.
/// Each result carries a short human-readable account of what was measured.
std::vector<CriterionResult> run_all();

/// Run a single criterion (1-based id as reported by run_all).
CriterionResult run_one(int id);

}  // namespace fpm::acceptance

#endif
