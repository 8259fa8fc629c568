#pragma once

#include <string>

// Regression driver over the bundled fixture instances: replays every
// documented verdict (classifications, welfare optima, checker outcomes,
// solver outputs) and reports one pass/fail line per assertion.

namespace fairdiv::cli {

struct PaperExamplesOptions {
  std::string fixtures_dir = "fixtures";
  unsigned long long seed = 20250810;
  bool json = false;
};

// 0 all assertions pass, 4 some assertion failed. Throws on missing or
// malformed fixture files.
int run_paper_examples(const PaperExamplesOptions& options);

}  // namespace fairdiv::cli
