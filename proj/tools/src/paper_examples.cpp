#include <algorithm>
#include <ostream>

#include "rsperm/cli/cli.hpp"
#include "rsperm/codes.hpp"
#include "rsperm/json.hpp"

namespace rsperm::cli {

namespace {

class Checker {
   public:
    explicit Checker(std::string title) { result_.title = std::move(title); }

    void expect(std::string name, const std::string& expected, const std::string& actual) {
        result_.checks.push_back({std::move(name), expected, actual, expected == actual});
    }
    void expect_true(std::string name, bool value) {
        expect(std::move(name), "true", value ? "true" : "false");
    }

    ExampleResult take() { return std::move(result_); }

   private:
    ExampleResult result_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string vector_string(const Vector& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(x.to_string());
    return "(" + join(parts, ",") + ")";
}

// A = (0,1,4,6) over F_13 with k = 3 = n-1.
ExampleResult example_f13() {
    Checker c("F_13, A = (0,1,4,6), RS(A,3)");
    const Field F = Field::prime(13);
    const EvaluationSet A(F, {F.from_int(0), F.from_int(1), F.from_int(4), F.from_int(6)});
    const auto G = rs_generator(A, 3);
    c.expect("generator matrix of RS(A,3)", "1 1 1 1\n0 1 4 6\n0 1 3 10\n", G.to_string());

    const auto report = brute_force_perm_group(rs_code(A, 3), A);
    c.expect("|Per(RS(A,3))|", "6", std::to_string(report.order));
    c.expect("Per(RS(A,3)) is non-abelian", "false", report.hint.abelian ? "true" : "false");
    c.expect("isomorphism type", "S_3", report.hint.label);

    const auto affine = affine_group(A);
    std::vector<std::string> polys, cycles;
    for (const auto& ap : affine) {
        polys.push_back(ap.map.to_string());
        cycles.push_back(ap.perm.cycle_string());
    }
    c.expect("affine polynomials preserving A", "x, 3*x + 1, 9*x + 4", join(polys, ", "));
    c.expect("affine permutations", "(), (1 2 3), (1 3 2)", join(cycles, ", "));
    c.expect("affine subgroup order", "3", std::to_string(report.affine_order));
    c.expect_true("affine group is a proper subgroup of Per",
                  !report.is_affine_equal && report.order % report.affine_order == 0);
    return c.take();
}

// F_9 = F_3[t]/(t^2 + 2t + 2), alpha = t with alpha^2 = alpha + 1, alpha^3 = -alpha + 1.
ExampleResult example_f9() {
    Checker c("F_9 (modulus t^2+2t+2), A = (0,1,2,alpha^2,alpha^6)");
    const Field F(FieldSpec::extension(3, {2, 2, 1}));
    const FieldElement alpha = F.from_coeffs({0, 1});
    c.expect("alpha^3 = -alpha + 1", (-alpha + F.one()).to_string(), alpha.pow(3).to_string());
    c.expect("alpha is primitive (order 8)", "8", [&] {
        std::uint64_t order = 1;
        while (!alpha.pow(order).is_one()) ++order;
        return std::to_string(order);
    }());
    c.expect("alpha^2", "[1,1]", alpha.pow(2).to_string());
    c.expect("alpha^6", "[2,2]", alpha.pow(6).to_string());

    const EvaluationSet A(F, {F.zero(), F.one(), F.from_int(2), alpha.pow(2), alpha.pow(6)});
    const Field& Fr = A.field();
    auto powers = [&](std::size_t e) { return eval_vector(Polynomial::monomial(Fr.one(), e), A); };
    Vector tau_x2 = powers(2);
    for (auto& y : tau_x2) y = y.frobenius(1);
    c.expect("tau(x^2)(A) = x^6(A)", vector_string(powers(6)), vector_string(tau_x2));
    c.expect("x^2(A) = x^6(A)", vector_string(powers(6)), vector_string(powers(2)));
    c.expect("x^9(A) = x(A)", vector_string(powers(1)), vector_string(powers(9)));

    const auto C = rs_code(A, 4);
    c.expect_true("tau fixes C = RS(A,4)", apply_field_automorphism(C, 1) == C);
    const auto D = rs_code(A, 3);
    c.expect_true("tau does not fix D = RS(A,3)", !(apply_field_automorphism(D, 1) == D));
    c.expect_true("tau(x)(A) = x^3(A) lies outside RS(A,3)", !contains(D, powers(3)));
    return c.take();
}

}  // namespace

bool ExampleResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<ExampleResult> run_paper_examples() { return {example_f13(), example_f9()}; }

int cmd_paper_examples(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto results = run_paper_examples();
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
    if (config.json) {
        nlohmann::json examples = nlohmann::json::array();
        for (const auto& r : results) {
            nlohmann::json checks = nlohmann::json::array();
            for (const auto& ch : r.checks)
                checks.push_back({{"name", ch.name},
                                  {"expected", ch.expected},
                                  {"actual", ch.actual},
                                  {"pass", ch.pass}});
            examples.push_back({{"title", r.title}, {"passed", r.passed()}, {"checks", checks}});
        }
        out << nlohmann::json{{"passed", ok}, {"examples", examples}}.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            out << "== " << r.title << "\n";
            for (const auto& ch : r.checks) {
                out << "  [" << (ch.pass ? "PASS" : "FAIL") << "] " << ch.name << "\n";
                if (!ch.pass)
                    err << "  mismatch in '" << ch.name << "'\n    expected: " << ch.expected
                        << "\n    actual:   " << ch.actual << "\n";
            }
        }
        out << (ok ? "all examples reproduced" : "example mismatch") << "\n";
    }
    return ok ? kOk : kVerificationFailed;
}

}  // namespace rsperm::cli
