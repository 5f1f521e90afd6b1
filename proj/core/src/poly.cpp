#include "rsperm/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsperm {

std::size_t Degree::value() const {
    if (!value_) throw std::domain_error("degree of the zero polynomial is -infinity");
    return *value_;
}

std::string Degree::to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

Polynomial::Polynomial(Field field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) check_field(c.field());
    normalize();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::x(const Field& field) {
    return Polynomial(field, {field.zero(), field.one()});
}

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t power) {
    std::vector<FieldElement> coeffs(power + 1, c.field().zero());
    coeffs[power] = c;
    return Polynomial(c.field(), std::move(coeffs));
}

Polynomial Polynomial::linear(const FieldElement& a, const FieldElement& b) {
    return Polynomial(a.field(), {b, a});
}

void Polynomial::check_field(const Field& other) const {
    if (!(field_ == other)) throw FieldMismatch("polynomial operands belong to different fields");
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : field_.zero();
}

FieldElement Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

FieldElement Polynomial::operator()(const FieldElement& a) const {
    if (!(a.field() == field_)) throw FieldMismatch("evaluation point from a different field");
    Code acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = field_.add(field_.mul(acc, a.code()), coeffs_[i].code());
    return {field_, acc};
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_field(rhs.field_);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    check_field(rhs.field_);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Code> prod(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Code a = coeffs_[i].code();
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            prod[i + j] = field_.add(prod[i + j], field_.mul(a, rhs.coeffs_[j].code()));
    }
    coeffs_.clear();
    coeffs_.reserve(prod.size());
    for (Code c : prod) coeffs_.emplace_back(field_, c);
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& s) {
    check_field(s.field());
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    auto term = [&](std::size_t i) {
        const auto& c = coeffs_[i];
        if (i == 0) return c.to_string();
        std::string mono = i == 1 ? "x" : "x^" + std::to_string(i);
        return c.is_one() ? mono : c.to_string() + "*" + mono;
    };
    if (coeffs_.size() == 2) {
        std::string out = term(1);
        if (!coeffs_[0].is_zero()) out += " + " + coeffs_[0].to_string();
        return out;
    }
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += term(i);
    }
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (!(a.field() == b.field())) throw FieldMismatch("polynomial operands belong to different fields");
    const Field& F = a.field();
    std::vector<Code> rem;
    rem.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) rem.push_back(c.code());
    const std::size_t db = b.coeffs().size() - 1;
    const Code lead_inv = F.inv(b.leading().code());
    std::vector<Code> quot(rem.size() > db ? rem.size() - db : 0, 0);
    for (std::size_t top = rem.size(); top-- > db;) {
        const Code f = F.mul(rem[top], lead_inv);
        if (f == 0) continue;
        const std::size_t shift = top - db;
        quot[shift] = f;
        for (std::size_t i = 0; i <= db; ++i)
            rem[shift + i] = F.sub(rem[shift + i], F.mul(f, b.coeffs()[i].code()));
    }
    rem.resize(std::min(rem.size(), db));
    auto to_poly = [&](const std::vector<Code>& cs) {
        std::vector<FieldElement> out;
        out.reserve(cs.size());
        for (Code c : cs) out.emplace_back(F, c);
        return Polynomial(F, std::move(out));
    };
    return {to_poly(quot), to_poly(rem)};
}

EvaluationSet::EvaluationSet(Field field, std::vector<FieldElement> points)
    : field_(std::move(field)), points_(std::move(points)), index_(field_.order(), -1) {
    if (points_.size() < 2) throw std::invalid_argument("evaluation set needs at least 2 points");
    if (points_.size() > field_.order())
        throw std::invalid_argument("evaluation set larger than the field");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& a = points_[i];
        if (!(a.field() == field_)) throw FieldMismatch("evaluation point from a different field");
        if (index_[a.code()] >= 0)
            throw std::invalid_argument("duplicate evaluation point " + a.to_string());
        index_[a.code()] = static_cast<std::int32_t>(i);
    }
}

std::optional<std::size_t> EvaluationSet::index_of(Code c) const {
    if (c >= index_.size() || index_[c] < 0) return std::nullopt;
    return static_cast<std::size_t>(index_[c]);
}

std::optional<std::size_t> EvaluationSet::index_of(const FieldElement& x) const {
    if (!(x.field() == field_)) return std::nullopt;
    return index_of(x.code());
}

std::string EvaluationSet::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) out += ", ";
        out += points_[i].to_string();
    }
    return out + ")";
}

FieldElement poly_eval(const Polynomial& f, const FieldElement& a) { return f(a); }

std::vector<FieldElement> eval_vector(const Polynomial& f, const EvaluationSet& A) {
    std::vector<FieldElement> out;
    out.reserve(A.size());
    for (const auto& a : A.points()) out.push_back(f(a));
    return out;
}

Polynomial vanishing_poly(const EvaluationSet& A) {
    const Field& F = A.field();
    Polynomial v = Polynomial::constant(F.one());
    for (const auto& a : A.points()) v *= Polynomial::linear(F.one(), -a);
    return v;
}

std::vector<Polynomial> indicator_functions(const EvaluationSet& A) {
    const Field& F = A.field();
    const std::size_t n = A.size();
    std::vector<Polynomial> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial num = Polynomial::constant(F.one());
        FieldElement den = F.one();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            num *= Polynomial::linear(F.one(), -A[j]);
            den *= A[i] - A[j];
        }
        out.push_back(num * den.inv());
    }
    return out;
}

Polynomial interpolate(std::span<const FieldElement> values, const EvaluationSet& A) {
    if (values.size() != A.size())
        throw std::invalid_argument("interpolate: expected " + std::to_string(A.size()) +
                                    " values, got " + std::to_string(values.size()));
    const auto basis = indicator_functions(A);
    Polynomial out(A.field());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].is_zero()) continue;
        out += basis[i] * values[i];
    }
    return out;
}

Polynomial poly_compose(const Polynomial& f, const Polynomial& g) {
    if (!(f.field() == g.field())) throw FieldMismatch("polynomial operands belong to different fields");
    Polynomial out(f.field());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        out *= g;
        out += Polynomial::constant(f.coeffs()[i]);
    }
    return out;
}

Polynomial reduce_mod_A(const Polynomial& f, const EvaluationSet& A) {
    return divmod(f, vanishing_poly(A)).second;
}

Polynomial compose_mod_A(const Polynomial& p1, const Polynomial& p2, const EvaluationSet& A) {
    if (!(p1.field() == A.field()) || !(p2.field() == A.field()))
        throw FieldMismatch("polynomial and evaluation set belong to different fields");
    const Polynomial v = vanishing_poly(A);
    const Polynomial inner = divmod(p2, v).second;
    Polynomial out(A.field());
    for (std::size_t i = p1.coeffs().size(); i-- > 0;) {
        out = divmod(out * inner, v).second;
        out += Polynomial::constant(p1.coeffs()[i]);
    }
    return out;
}

}  // namespace rsperm
