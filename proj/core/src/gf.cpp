#include "rsperm/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

namespace rsperm {

namespace detail {

struct FieldTables {
    FieldSpec spec;
    std::vector<std::uint32_t> pow_p;  // p^i for i <= m
    std::vector<Code> exp;             // exp[i] = g^i, doubled length to skip a mod
    std::vector<std::uint32_t> log;    // log[0] unused
    Code generator = 1;
};

}  // namespace detail

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of a by b over F_p; b must be nonzero with trimmed leading term.
Coeffs poly_rem(Coeffs a, const Coeffs& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = [&] {
        std::uint64_t r = 1, base = b.back(), e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    }();
    while (a.size() > db && !a.empty()) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint64_t f = a.back() * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = f * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Coeffs unpack(Code c, std::uint32_t p, std::uint32_t m) {
    Coeffs out(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        out[i] = c % p;
        c /= p;
    }
    return out;
}

Code pack(const Coeffs& c, std::uint32_t p) {
    Code out = 0;
    for (std::size_t i = c.size(); i-- > 0;) out = out * p + c[i];
    return out;
}

// Product of two packed elements by schoolbook multiplication mod the
// modulus; used only while building the tables.
Code slow_mul(Code a, Code b, const FieldSpec& spec) {
    const auto p = spec.p();
    const auto m = spec.m();
    if (m == 1) return static_cast<Code>(std::uint64_t{a} * b % p);
    const Coeffs ca = unpack(a, p, m), cb = unpack(b, p, m);
    Coeffs prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p);
    Coeffs r = poly_rem(std::move(prod), spec.modulus(), p);
    r.resize(m, 0);
    return pack(r, p);
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::uint32_t parse_residue(std::string_view s, std::uint32_t p) {
    s = strip(s);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed field element literal '" + std::string(s) + "'");
    if (v >= p)
        throw std::invalid_argument("residue " + std::string(s) + " out of range for p = " +
                                    std::to_string(p));
    return static_cast<std::uint32_t>(v);
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
    Coeffs f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        // Enumerate monic divisors x^d + c_{d-1} x^{d-1} + ... + c_0.
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Coeffs g(d + 1);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t m) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Coeffs g(m + 1);
        std::uint64_t t = idx;
        for (std::uint32_t i = 0; i < m; ++i) {
            g[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        g[m] = 1;
        if (is_irreducible(p, g)) return g;
    }
    throw std::logic_error("no irreducible polynomial found");
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw std::invalid_argument("field order exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    return FieldSpec(p, 1, {});
}

FieldSpec FieldSpec::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    const auto m = static_cast<std::uint32_t>(modulus.size() - 1);
    if (m == 1) return prime(p);
    FieldSpec spec(p, m, modulus);  // checks the order bound before the search
    if (!is_irreducible(p, modulus)) throw std::invalid_argument("modulus is reducible over F_p");
    return spec;
}

FieldSpec FieldSpec::of_order(std::uint32_t q) {
    if (q < 2 || q > kMaxFieldOrder)
        throw std::invalid_argument("field order must lie in [2, 2^16]");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t m = 0;
    for (std::uint32_t r = q; r > 1; r /= p) {
        if (r % p != 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        ++m;
    }
    if (m == 1) return prime(p);
    return extension(p, find_irreducible(p, m));
}

Field::Field(const FieldSpec& spec) {
    auto t = std::make_shared<detail::FieldTables>(detail::FieldTables{spec, {}, {}, {}, 1});
    const auto p = spec.p();
    const auto q = spec.order();
    t->pow_p.resize(spec.m() + 1);
    t->pow_p[0] = 1;
    for (std::uint32_t i = 1; i <= spec.m(); ++i) t->pow_p[i] = t->pow_p[i - 1] * p;

    t->log.assign(q, 0);
    t->exp.assign(2 * (q - 1), 0);
    for (Code g = 1; g < q; ++g) {
        Code x = 1;
        std::uint32_t order = 0;
        do {
            t->exp[order] = x;
            x = slow_mul(x, g, spec);
            ++order;
        } while (x != 1 && order < q);
        if (order == q - 1) {
            t->generator = g;
            break;
        }
    }
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        t->log[t->exp[i]] = i;
        t->exp[i + q - 1] = t->exp[i];
    }
    tables_ = std::move(t);
}

const FieldSpec& Field::spec() const noexcept { return tables_->spec; }

FieldElement Field::zero() const { return {*this, 0}; }
FieldElement Field::one() const { return {*this, 1}; }

FieldElement Field::from_code(Code c) const {
    if (c >= order()) throw std::invalid_argument("element code out of range");
    return {*this, c};
}

FieldElement Field::from_int(std::uint64_t v) const { return {*this, static_cast<Code>(v % p())}; }

FieldElement Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != m()) throw std::invalid_argument("coefficient vector must have length m");
    for (auto c : coeffs)
        if (c >= p()) throw std::invalid_argument("coefficient out of range");
    return {*this, pack(coeffs, p())};
}

FieldElement Field::primitive_element() const { return {*this, tables_->generator}; }

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(order());
    for (Code c = 0; c < order(); ++c) out.emplace_back(*this, c);
    return out;
}

std::vector<FieldElement> Field::nonzero_elements() const {
    auto all = elements();
    all.erase(all.begin());
    return all;
}

FieldElement Field::parse(std::string_view text) const {
    std::string_view s = strip(text);
    if (m() == 1) {
        if (!s.empty() && s.front() == '[')
            throw std::invalid_argument("prime field elements are plain integers");
        return {*this, parse_residue(s, p())};
    }
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("extension field element must be written [c0,...,c" +
                                    std::to_string(m() - 1) + "]");
    s = s.substr(1, s.size() - 2);
    Coeffs coeffs;
    while (true) {
        const auto comma = s.find(',');
        coeffs.push_back(parse_residue(s.substr(0, comma), p()));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    if (coeffs.size() != m())
        throw std::invalid_argument("expected " + std::to_string(m()) + " coefficients, got " +
                                    std::to_string(coeffs.size()));
    return {*this, pack(coeffs, p())};
}

std::string Field::format(Code c) const {
    if (m() == 1) return std::to_string(c);
    std::string out = "[";
    const Coeffs cs = unpack(c, p(), m());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(cs[i]);
    }
    return out + "]";
}

std::string Field::name() const {
    std::string out = "F_" + std::to_string(order());
    if (m() > 1) {
        out += " (p=" + std::to_string(p()) + ", modulus ";
        const auto& mod = spec().modulus();
        for (std::size_t i = 0; i < mod.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(mod[i]);
        }
        out += ")";
    }
    return out;
}

Code Field::add(Code a, Code b) const noexcept {
    const auto p = spec().p();
    if (spec().m() == 1) {
        const Code s = a + b;
        return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    Code out = 0;
    for (std::uint32_t i = 0; i < spec().m(); ++i) {
        std::uint32_t d = a % p + b % p;
        if (d >= p) d -= p;
        out += d * tables_->pow_p[i];
        a /= p;
        b /= p;
    }
    return out;
}

Code Field::neg(Code a) const noexcept {
    const auto p = spec().p();
    if (spec().m() == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    Code out = 0;
    for (std::uint32_t i = 0; i < spec().m(); ++i) {
        const std::uint32_t d = a % p;
        out += (d == 0 ? 0 : p - d) * tables_->pow_p[i];
        a /= p;
    }
    return out;
}

Code Field::sub(Code a, Code b) const noexcept { return add(a, neg(b)); }

Code Field::mul(Code a, Code b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return tables_->exp[tables_->log[a] + tables_->log[b]];
}

Code Field::inv(Code a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t l = tables_->log[a];
    return tables_->exp[l == 0 ? 0 : (order() - 1) - l];
}

Code Field::pow(Code a, std::uint64_t e) const noexcept {
    Code result = 1;
    Code base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Code Field::frobenius(Code a, std::uint32_t j) const noexcept {
    for (std::uint32_t i = 0; i < j; ++i) a = pow(a, spec().p());
    return a;
}

bool Field::same_as(const Field& other) const noexcept {
    return tables_ == other.tables_ || tables_->spec == other.tables_->spec;
}

std::vector<std::uint32_t> FieldElement::coeffs() const {
    return unpack(code_, field_.p(), field_.m());
}

void FieldElement::check_same_field(const FieldElement& other) const {
    if (!(field_ == other.field_))
        throw FieldMismatch("operands belong to different fields: " + field_.name() + " vs " +
                            other.field_.name());
}

FieldElement FieldElement::inv() const { return {field_, field_.inv(code_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(code_, e)}; }

FieldElement FieldElement::frobenius(std::uint32_t j) const {
    return {field_, field_.frobenius(code_, j)};
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    check_same_field(rhs);
    code_ = field_.add(code_, rhs.code_);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    check_same_field(rhs);
    code_ = field_.sub(code_, rhs.code_);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    check_same_field(rhs);
    code_ = field_.mul(code_, rhs.code_);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    check_same_field(rhs);
    code_ = field_.mul(code_, field_.inv(rhs.code_));
    return *this;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace rsperm
