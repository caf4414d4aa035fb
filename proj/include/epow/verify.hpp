#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epow/ideal.hpp"

namespace epow {

enum class CheckStatus { pass, fail, discrepancy };

struct CheckResult {
  std::string name;
  std::string instance;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerifyOptions {
  int n_max = 8;          // anti-d-path and initial lexsegment sweep
  int d_max = 3;
  int k_max = 3;          // powers (t for lexsegments)
  int lex_final_n_max = 7;
  int t_max = 3;
  int chain_depth = 3;    // K for associated-prime chains
  int ass_n_max = 10;     // primary decomposition / chain invariants
  int ass_d_max = 4;
  int exhaustive_n_max = 6; // chordality vs linear quotients, all graphs
  std::uint64_t seed = 0;
};

enum class FamilyFilter { all, lexseg, antipath };

// One result per checked statement; a failing row carries a reproducer in
// `instance` and the mismatch in `detail`.
std::vector<CheckResult> check_antipath_generators(const VerifyOptions& opts);
std::vector<CheckResult> check_antipath_quotients(const VerifyOptions& opts);
std::vector<CheckResult> check_lexsegment_quotients(const VerifyOptions& opts);
std::vector<CheckResult> check_betti_agreement(
    const VerifyOptions& opts, FamilyFilter filter = FamilyFilter::all);
std::vector<CheckResult> check_chordal_consistency(const VerifyOptions& opts);
std::vector<CheckResult> check_primary_decomposition(const VerifyOptions& opts);
std::vector<CheckResult> check_ass_theorem(const VerifyOptions& opts);
std::vector<CheckResult> check_two_method_agreement(const VerifyOptions& opts);
std::vector<CheckResult> check_ass_invariants(const VerifyOptions& opts);
std::vector<CheckResult> check_audits(const VerifyOptions& opts);
std::vector<CheckResult> check_core_properties(const VerifyOptions& opts);
std::vector<CheckResult> check_oracle_internals(const VerifyOptions& opts);

enum class VerifySuite { all, lexseg, antipath, audits };

std::vector<CheckResult> run_verify(VerifySuite suite,
                                    const VerifyOptions& opts);

/// True when no row failed; documented discrepancies do not count as
/// failures.
bool all_passed(const std::vector<CheckResult>& results);

const char* to_string(CheckStatus status);

} // namespace epow
