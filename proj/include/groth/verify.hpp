#pragma once
#include <string>
#include <vector>

namespace groth {

struct VerificationReport {
  std::string check;
  std::string range;
  bool pass = true;
  std::string counterexample;  // JSON payload, nonempty iff !pass
  long long ms = 0;
};

std::vector<std::string> suite_names();

// Runs one named suite.  nmax <= 0 selects the suite's default range;
// jobs <= 0 selects the hardware concurrency.  cache_dir (may be empty)
// backs the Grothendieck-polynomial cache for expensive permutations.
std::vector<VerificationReport> run_suite(const std::string& suite, int nmax,
                                          int jobs,
                                          const std::string& cache_dir);

// CSV text for the basis matrix A_n, rows/columns labelled by subsets.
std::string a_matrix_csv(int n);

}  // namespace groth
