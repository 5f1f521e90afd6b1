#pragma once

// Dense univariate polynomials over a finite field, evaluation sets, Lagrange
// indicator functions and composition modulo an evaluation set.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsperm/gf.hpp"

namespace rsperm {

/// Polynomial degree with an explicit -infinity for the zero polynomial.
class Degree {
   public:
    constexpr Degree(std::size_t d) noexcept : value_(d) {}  // NOLINT(google-explicit-constructor)
    static constexpr Degree neg_inf() noexcept { return Degree(); }

    constexpr bool is_neg_inf() const noexcept { return !value_.has_value(); }
    /// Throws std::domain_error for -infinity.
    std::size_t value() const;

    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
        return Degree(*a.value_ + *b.value_);
    }
    friend constexpr bool operator==(Degree, Degree) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
        if (a.is_neg_inf() && b.is_neg_inf()) return std::strong_ordering::equal;
        if (a.is_neg_inf()) return std::strong_ordering::less;
        if (b.is_neg_inf()) return std::strong_ordering::greater;
        return *a.value_ <=> *b.value_;
    }

    std::string to_string() const;

   private:
    constexpr Degree() noexcept = default;
    std::optional<std::size_t> value_;
};

class Polynomial {
   public:
    explicit Polynomial(Field field) : field_(std::move(field)) {}
    /// Ascending coefficients; trailing zeros are stripped.
    Polynomial(Field field, std::vector<FieldElement> coeffs);
    static Polynomial constant(const FieldElement& c);
    static Polynomial x(const Field& field);
    static Polynomial monomial(const FieldElement& c, std::size_t power);
    /// a*x + b.
    static Polynomial linear(const FieldElement& a, const FieldElement& b);

    const Field& field() const noexcept { return field_; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    Degree degree() const noexcept {
        return coeffs_.empty() ? Degree::neg_inf() : Degree(coeffs_.size() - 1);
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of x^i (zero beyond the degree).
    FieldElement coeff(std::size_t i) const;
    FieldElement leading() const;

    FieldElement operator()(const FieldElement& a) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const FieldElement& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const FieldElement& s) { return a *= s; }
    friend Polynomial operator*(const FieldElement& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    /// `c0 + c1*x + c2*x^2 + ...` with zero terms omitted; degree-1
    /// polynomials print as `a*x + b`.
    std::string to_string() const;

   private:
    void check_field(const Field& other) const;
    void normalize();

    Field field_;
    std::vector<FieldElement> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// The ordered, pairwise distinct evaluation points (a_1, ..., a_n), n >= 2.
class EvaluationSet {
   public:
    EvaluationSet(Field field, std::vector<FieldElement> points);

    const Field& field() const noexcept { return field_; }
    const std::vector<FieldElement>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    const FieldElement& operator[](std::size_t i) const { return points_[i]; }
    /// Index of a point, or std::nullopt when absent.
    std::optional<std::size_t> index_of(const FieldElement& x) const;
    std::optional<std::size_t> index_of(Code c) const;

    std::string to_string() const;

   private:
    Field field_;
    std::vector<FieldElement> points_;
    std::vector<std::int32_t> index_;  // code -> position, -1 if absent
};

FieldElement poly_eval(const Polynomial& f, const FieldElement& a);
std::vector<FieldElement> eval_vector(const Polynomial& f, const EvaluationSet& A);

/// prod_i (x - a_i).
Polynomial vanishing_poly(const EvaluationSet& A);

/// L_i(x) = prod_{j != i} (x - a_j) / (a_i - a_j), so L_i(a_j) = [i == j].
std::vector<Polynomial> indicator_functions(const EvaluationSet& A);

/// The unique f with deg f < n and f(a_i) = values[i].
Polynomial interpolate(std::span<const FieldElement> values, const EvaluationSet& A);

/// f(g(x)) by Horner's rule in g.
Polynomial poly_compose(const Polynomial& f, const Polynomial& g);

/// Remainder of p1(p2(x)) modulo vanishing_poly(A); degree < n.
Polynomial compose_mod_A(const Polynomial& p1, const Polynomial& p2, const EvaluationSet& A);

/// Reduction of f modulo vanishing_poly(A).
Polynomial reduce_mod_A(const Polynomial& f, const EvaluationSet& A);

}  // namespace rsperm
