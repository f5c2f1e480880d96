#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mzv/gmaps.hpp"

namespace mzv {

// Configuration shared by every verification suite.
struct Config {
    FieldSpec field{3, 1, {}};
    long prec = 30;       // Laurent precision N
    unsigned dmax = 3;    // brute-force degree bound for the random-pair checks
    std::uint64_t seed = 0;
};

struct CheckResult {
    std::string check_id;
    std::map<std::string, std::string> params;
    std::string status;  // PASS | FAIL | SKIP
    std::string mode;    // EXACT | PRECISION
    std::optional<long> residual_valuation;  // nullopt renders as "inf"
    long runtime_ms = 0;
};

const std::vector<std::string>& suite_names();  // excludes "all"
bool is_suite(const std::string& name);

// Runs one named suite (or "all").  Deterministic for a fixed config.
std::vector<CheckResult> run_suite(const std::string& name, const Config& cfg);

// The statements every run must cover: (check-id prefix, owning suite).
const std::vector<std::pair<std::string, std::string>>& statement_manifest();

std::string report_json(const std::vector<CheckResult>& results, const Config& cfg);
// 0 when nothing failed, 1 otherwise
int aggregate_exit(const std::vector<CheckResult>& results);

// Independent oracles used by the suites (and reused by the test binaries):
// the literal defining sums, with no shared structure with the fast paths.

// S_d(A) by enumeration of full tuples (a_1, ..., a_r), no factorization.
TPoly power_sum_tuple_oracle(const Ctx& ctx, const AdmissibleArray& A, unsigned d);

// Dagger slice by enumeration of degree flags with enumerated S_e(s) factors.
TPoly dagger_flag_oracle(const Ctx& ctx, const AdmissibleArray& A, unsigned d);

// Per-degree evaluation of an array combo against a product of brute
// values, compared exactly over a shared structured denominator.
bool stuffle_case_exact(const Ctx& ctx, const WeightedSubset& sigma, unsigned s,
                        const WeightedSubset& gamma, unsigned t, unsigned d);

// Same idea for a general product expansion at degree d: the product named
// by (A, B, mode) against the combo's evaluation, brute (or dagger-flag)
// values on both sides.
bool stuffle_mode_exact(const Ctx& ctx, const AdmissibleArray& A, const AdmissibleArray& B,
                        ProdMode mode, const ArrayCombo& combo, unsigned d, bool dagger);

// Every plain-type array with |type| < q, depth <= 3 and weight <= 6 over
// the indices {1, 2}: the desk-scale cross-check matrix.
std::vector<AdmissibleArray> desk_matrix_arrays(unsigned q);

// JSON mirrors of the textual serializations.  Laurent values render as
// {top, floor, coeffs} with coefficients descending from top; exact
// polynomial data keeps numerator/denominator coefficient arrays.
std::string laurent_to_json(const Laurent& v);
std::string tate_to_json(const TateElem& v);
std::string tpoly_to_json(const TPoly& v);
std::string combo_to_json(const ArrayCombo& v);
std::string trivial_to_json(const TrivialMZV& v);

}  // namespace mzv
