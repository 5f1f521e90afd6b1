#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsperm/gf.hpp"
#include "rsperm/permgroup.hpp"
#include "rsperm/poly.hpp"

namespace rsperm::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInvalidInput = 2,
};

struct RunConfig {
    std::optional<std::uint32_t> field;
    std::vector<std::uint32_t> modulus;
    std::string points;
    std::optional<std::size_t> k;
    bool json = false;
    std::size_t max_n = 10;
    std::uint64_t seed = 42;
    std::size_t trials = 200;
    unsigned threads = 1;
    SearchMode mode = SearchMode::exhaustive;
};

/// Field from --field and --modulus; throws std::invalid_argument.
Field make_field(const RunConfig& config);

/// Comma-separated element literals; commas inside [...] belong to one literal.
std::vector<std::string> split_points(std::string_view text);

/// Distinct points of A; throws std::invalid_argument.
EvaluationSet make_evaluation_set(const Field& field, std::string_view text);

SearchOptions search_options(const RunConfig& config);

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ExampleResult {
    std::string title;
    std::vector<Check> checks;
    bool passed() const;
};

/// The F_13 example (k = n-1, Per = S_3 strictly larger than the affine
/// group) and the F_9 Frobenius example.
std::vector<ExampleResult> run_paper_examples();

int cmd_affine(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_group(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_paper_examples(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line without the program name, e.g. {"group", "--field", "13", ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsperm::cli
