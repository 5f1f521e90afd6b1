#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <ostream>

#include "rsperm/cli/cli.hpp"

namespace rsperm::cli {

Field make_field(const RunConfig& config) {
    if (!config.field) throw std::invalid_argument("--field is required");
    const std::uint32_t q = *config.field;
    if (config.modulus.empty()) return Field::of_order(q);

    const auto m = static_cast<std::uint32_t>(config.modulus.size() - 1);
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint64_t power = 1;
    for (std::uint32_t i = 0; i < m; ++i) power *= p;
    if (m < 2 || power != q)
        throw std::invalid_argument("--modulus of degree " + std::to_string(m) +
                                    " does not define an extension of order " + std::to_string(q));
    return Field(FieldSpec::extension(p, config.modulus));
}

std::vector<std::string> split_points(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (depth < 0) throw std::invalid_argument("unbalanced ']' in point list");
        if (c == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (depth != 0) throw std::invalid_argument("unbalanced '[' in point list");
    out.push_back(current);
    return out;
}

EvaluationSet make_evaluation_set(const Field& field, std::string_view text) {
    if (text.empty()) throw std::invalid_argument("--points is required");
    std::vector<FieldElement> points;
    for (const auto& literal : split_points(text)) points.push_back(field.parse(literal));
    return EvaluationSet(field, std::move(points));
}

SearchOptions search_options(const RunConfig& config) {
    SearchOptions options;
    options.max_n = config.max_n;
    options.mode = config.mode;
    options.threads = config.threads;
    return options;
}

namespace {

void add_search_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_flag("--json", cfg.json, "Emit JSON instead of text");
    cmd->add_option("--max-n", cfg.max_n, "Largest code length searched exhaustively")
        ->capture_default_str();
    cmd->add_option("--threads", cfg.threads, "Worker threads for the permutation search")
        ->capture_default_str()
        ->check(CLI::Range(1u, 256u));
    const std::map<std::string, SearchMode> modes{{"exhaustive", SearchMode::exhaustive},
                                                    {"backtrack", SearchMode::backtrack}};
    cmd->add_option("--search", cfg.mode, "Permutation search strategy")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
}

void add_field_flags(CLI::App* cmd, RunConfig& cfg, bool needs_k) {
    cmd->add_option("--field", cfg.field, "Field order q (prime or prime power)")->required();
    cmd->add_option("--modulus", cfg.modulus, "Ascending coefficients c0,c1,...,1 of the modulus")
        ->delimiter(',');
    cmd->add_option("--points", cfg.points, "Comma-separated evaluation points")->required();
    if (needs_k) cmd->add_option("--k", cfg.k, "Code dimension")->required();
    add_search_flags(cmd, cfg);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Permutation groups of Reed-Solomon codes over arbitrary evaluation sets", "rsperm"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* affine = app.add_subcommand("affine", "List the affine permutations of A");
    add_field_flags(affine, cfg, false);
    auto* group = app.add_subcommand("group", "Compute Per(RS(A,k)) by exhaustive search");
    add_field_flags(group, cfg, true);
    auto* verify = app.add_subcommand("verify", "Compare Per(RS(A,k)) with the affine group of A");
    add_field_flags(verify, cfg, true);
    auto* sweep = app.add_subcommand("sweep", "Seeded random verification sweep");
    sweep->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    sweep->add_option("--trials", cfg.trials, "Number of random instances")->capture_default_str();
    add_search_flags(sweep, cfg);
    auto* paper = app.add_subcommand("paper-examples", "Reproduce the F_13 and F_9 worked examples");
    paper->add_flag("--json", cfg.json, "Emit JSON instead of text");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? kOk : kInvalidInput;
    }

    if (*affine) return cmd_affine(cfg, out, err);
    if (*group) return cmd_group(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*sweep) return cmd_sweep(cfg, out, err);
    return cmd_paper_examples(cfg, out, err);
}

}  // namespace rsperm::cli
