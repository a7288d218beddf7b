#pragma once
// Batch front-end: classification reports, verification suites, artifacts.
//
// Exit codes, in order of precedence: 2 input error, 1 assertion failure,
// 3 inconclusive, 0 pass.

#include "sr/lemmas.hpp"
#include "sr/osc.hpp"
#include "sr/restriction.hpp"

#include <filesystem>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sr::cli {

inline constexpr int schema_version = 1;

enum ExitCode : int { pass = 0, assertion_failure = 1, input_error = 2, inconclusive = 3 };

// Per-check outcome; combine() keeps the one with the higher precedence.
enum class Outcome { pass, failure, inconclusive, input_error };
Outcome combine(Outcome a, Outcome b);
int exit_code(Outcome o);
std::string to_string(Outcome o);

struct RunConfig {
    std::vector<std::string> inputs;
    std::string suite = "all";
    // Decay fits. Unset: each problem keeps its own range (2^8..2^16, and
    // 2^8..2^18 for the counterexample).
    std::optional<int> lambda_min_exp, lambda_max_exp;
    double tol = 1e-8;
    std::uint64_t seed = 42;
    std::filesystem::path out_dir = "out";
    unsigned threads = 0;
    Rational m = 2;
    bool family = false;  // classify: also write the family grid CSV
};

// temp file in the same directory, then rename
void write_atomic(const std::filesystem::path& path, const std::string& content);

// JSON text (2-space indent, trailing newline). Rationals are
// {"num": .., "den": .., "decimal": ".."}.
std::string rational_json(const Rational& r);
std::string report_json(const RestrictionReport& r);
std::string bound_check_json(const BoundCheck& c, const std::string& csv_file);

// Named decay problems of the decay suite.
struct DecayProblem {
    std::string name;
    OscIntegralSpec spec;  // lambda grid filled in from the run config
    double expected_slope = 0;
    double slope_tol = 0.05;
    Quad2dConfig cfg;
};
std::vector<DecayProblem> decay_problems(const RunConfig& c);
// CSV "lambda,re,im,abs,log2_abs,fitted_slope".
std::string decay_table_csv(const DecayFit& f);

// Check names each suite expands to.
std::vector<std::string> suite_members(const std::string& suite);

// Reads one polynomial per file ('#' starts a comment). Throws
// std::invalid_argument on an unreadable or empty file.
std::string read_poly_file(const std::filesystem::path& p);

// Family grid for B = 3..5, A = 0..B-3, n = 2B+1..2B+8.
std::string family_csv(const Rational& m = 2);

int run_classify(const RunConfig& c, std::ostream& log);
int run_verify(const RunConfig& c, std::ostream& log);

}  // namespace sr::cli
