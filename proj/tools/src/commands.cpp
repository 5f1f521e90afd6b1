#include <iomanip>
#include <ostream>
#include <sstream>

#include "rsperm/cli/cli.hpp"
#include "rsperm/codes.hpp"
#include "rsperm/json.hpp"
#include "rsperm/sweep.hpp"

namespace rsperm::cli {

namespace {

struct Instance {
    Field field;
    EvaluationSet points;
};

Instance load_instance(const RunConfig& config) {
    Field F = make_field(config);
    EvaluationSet A = make_evaluation_set(F, config.points);
    return {F, std::move(A)};
}

std::size_t checked_k(const RunConfig& config, const EvaluationSet& A) {
    const std::size_t k = config.k.value_or(0);
    if (k < 1 || k > A.size())
        throw std::invalid_argument("--k must lie in [1, " + std::to_string(A.size()) + "]");
    return k;
}

void check_length(const RunConfig& config, const EvaluationSet& A) {
    if (A.size() > config.max_n)
        throw SearchLimitExceeded("n = " + std::to_string(A.size()) + " exceeds --max-n " +
                                  std::to_string(config.max_n));
}

// Runs body, mapping input errors to exit code 2.
template <class Body>
int guarded(std::ostream& err, Body body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
}

void print_header(std::ostream& out, const Field& F, const EvaluationSet& A) {
    out << "field:  " << F.name() << "\n";
    out << "points: A = " << A.to_string() << "  (n = " << A.size() << ")\n";
}

std::string hint_string(const IsomorphismHint& hint) {
    std::string s = hint.abelian ? "abelian" : "non-abelian";
    if (!hint.label.empty()) s += ", " + hint.label;
    return s;
}

void print_members(std::ostream& out, const GroupReport& report) {
    std::size_t width = 6;
    for (const auto& m : report.elements) width = std::max(width, m.perm.to_string().size());
    out << "  " << std::left << std::setw(static_cast<int>(width)) << "perm" << "  "
        << std::setw(12) << "cycles" << "  " << std::setw(6) << "degree" << "  "
        << std::setw(6) << "affine" << "  p_pi\n";
    for (const auto& m : report.elements)
        out << "  " << std::setw(static_cast<int>(width)) << m.perm.to_string() << "  "
            << std::setw(12) << m.perm.cycle_string() << "  " << std::setw(6) << m.degree.to_string()
            << "  " << std::setw(6) << (m.affine ? "yes" : "no") << "  " << m.poly.to_string() << "\n";
    out << std::right;
}

void print_group(std::ostream& out, const GroupReport& report) {
    out << "Per(RS(A," << report.k << ")): order " << report.order << " (" << hint_string(report.hint)
        << ")\n";
    out << "affine subgroup order: " << report.affine_order << "\n";
    out << "equal to affine group: " << (report.is_affine_equal ? "yes" : "no") << "\n";
    print_members(out, report);
}

std::string reproduce_command(const SweepInstance& s) {
    std::string cmd = "rsperm verify --field " + std::to_string(s.spec.order());
    if (!s.spec.is_prime_field()) {
        cmd += " --modulus ";
        for (std::size_t i = 0; i < s.spec.modulus().size(); ++i) {
            if (i) cmd += ',';
            cmd += std::to_string(s.spec.modulus()[i]);
        }
    }
    cmd += " --points ";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (i) cmd += ',';
        cmd += s.points[i];
    }
    return cmd + " --k " + std::to_string(s.k);
}

}  // namespace

int cmd_affine(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto [F, A] = load_instance(config);
        const auto group = affine_group(A);
        if (config.json) {
            out << to_json(group).dump(2) << "\n";
            return kOk;
        }
        print_header(out, F, A);
        out << "affine permutations of A: " << group.size() << "\n";
        for (const auto& ap : group)
            out << "  " << std::left << std::setw(20) << ap.map.to_string() << std::setw(24)
                << ap.perm.to_string() << ap.perm.cycle_string() << std::right << "\n";
        return kOk;
    });
}

int cmd_group(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto [F, A] = load_instance(config);
        const std::size_t k = checked_k(config, A);
        check_length(config, A);
        const auto report = brute_force_perm_group(rs_code(A, k), A, search_options(config));
        if (config.json) {
            out << to_json(report).dump(2) << "\n";
            return kOk;
        }
        print_header(out, F, A);
        print_group(out, report);
        return kOk;
    });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto [F, A] = load_instance(config);
        const std::size_t k = checked_k(config, A);
        check_length(config, A);
        const auto report = check_theorem(A, k, search_options(config));
        const int code = report.passed() ? kOk : kVerificationFailed;
        if (config.json) {
            out << to_json(report).dump(2) << "\n";
            return code;
        }
        print_header(out, F, A);
        if (!report.in_range) out << "warning: " << report.warning << "\n";
        out << "|Per(RS(A," << k << "))| = " << report.group.order << " ("
            << hint_string(report.group.hint) << ")\n";
        out << "|affine group of A|  = " << report.affine.size() << "\n";
        out << "affine group contained in Per: " << (report.affine_contained ? "yes" : "no") << "\n";
        out << "groups equal: " << (report.equal ? "yes" : "no") << "\n";
        out << "every p_pi has degree 1: " << (report.all_degree_one ? "yes" : "no") << "\n";
        out << "deg p_pi < min(k, n-k) = " << std::min(k, A.size() - k) << ": "
            << (report.degree_bound_holds ? "yes" : "no") << "\n";
        if (report.in_range)
            out << (report.passed() ? "VERIFIED" : "MISMATCH: Per(RS(A,k)) differs from the affine group")
                << "\n";
        else
            out << "REPORTED (k outside 1 < k < n-1)\n";
        return code;
    });
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        SweepConfig sc;
        sc.seed = config.seed;
        sc.trials = config.trials;
        sc.search = search_options(config);
        const auto result = run_sweep(sc);
        const int code = result.failed() == 0 ? kOk : kVerificationFailed;
        if (config.json) {
            out << to_json(result).dump(2) << "\n";
            return code;
        }
        out << "sweep rng=" << result.rng << " seed=" << result.seed
            << " trials=" << result.instances.size() << "\n";
        for (const auto& s : result.instances) {
            out << "trial " << std::setw(4) << s.trial << "  q=" << std::setw(2) << s.spec.order()
                << " n=" << s.n << " k=" << s.k << "  |Per|=" << std::setw(3) << s.order
                << " |Per(dual)|=" << std::setw(3) << s.dual_order << " |affine|=" << std::setw(3)
                << s.affine_order << "  " << (s.passed() ? "PASS" : "FAIL") << "\n";
            if (!s.passed())
                out << "  theorem=" << s.theorem_ok << " duality=" << s.duality_ok
                    << " degree=" << s.degree_ok << "\n  reproduce: " << reproduce_command(s) << "\n";
        }
        out << "passed " << result.passed() << "/" << result.instances.size() << "\n";
        return code;
    });
}

}  // namespace rsperm::cli
