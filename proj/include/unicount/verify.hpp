#pragma once

#include <cstdint>
#include <vector>

#include "unicount/ff/oracle.hpp"
#include "unicount/json_io.hpp"

namespace unicount {

// The two verification suites behind `unicount verify`.
//
// The appendix suite re-derives symbolic identities entirely inside the
// polynomial layer: conservation of subspace counts, invariance under block
// permutation, the GL/PGL factor, coefficient positivity in both the q and
// q-1 bases, and the frozen reference table.
//
// The oracle suite compares the symbolic polynomials against brute-force
// counts over concrete prime fields; nothing on the oracle side reuses the
// symbolic formulas.
//
// Each record aggregates one named check over all its cases; on failure the
// record keeps the first failing case in `parameters` and the two
// disagreeing values in `symbolic` / `oracle`.

struct VerifyOptions {
  int max_n = 4;                        // size cap for the case grids
  std::vector<int> primes = {2, 3, 5};  // fields the oracle suite samples
  std::uint64_t element_budget = 10'000'000;
  ff::Exec exec = ff::Exec::Parallel;
  bool inject_fault = false;  // corrupt one conservation case on purpose
};

std::vector<CheckRecord> run_appendix_suite(const VerifyOptions& options);
std::vector<CheckRecord> run_oracle_suite(const VerifyOptions& options);

bool all_checks_pass(const std::vector<CheckRecord>& records);

}  // namespace unicount
