#pragma once

// Exact arithmetic in F_p and GF(p^m) for fields of order at most 2^16.
//
// Elements are stored as a packed code c_0 + c_1*p + ... + c_{m-1}*p^{m-1}
// of their coefficient vector over F_p (ascending powers of the generator t).
// Multiplication goes through exp/log tables built once per field.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rsperm {

/// Packed coefficient vector of a field element.
using Code = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class FieldMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Validated description of GF(p^m): prime p, degree m, and for m > 1 a monic
/// irreducible modulus given by ascending coefficients (length m + 1).
class FieldSpec {
   public:
    static FieldSpec prime(std::uint32_t p);
    static FieldSpec extension(std::uint32_t p, std::vector<std::uint32_t> modulus);

    /// GF(q) for a prime power q. Extensions get the lexicographically
    /// smallest monic irreducible modulus (compared from the top coefficient
    /// down, i.e. by packed code).
    static FieldSpec of_order(std::uint32_t q);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    bool is_prime_field() const noexcept { return m_ == 1; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

   private:
    FieldSpec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    std::uint32_t p_ = 2;
    std::uint32_t m_ = 1;
    std::uint32_t q_ = 2;
    std::vector<std::uint32_t> modulus_;
};

bool is_prime(std::uint32_t n) noexcept;

/// True iff the monic polynomial (ascending coefficients mod p) has no monic
/// factor of degree 1..deg/2. Exhaustive divisor search.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

/// Smallest monic irreducible polynomial of degree m over F_p (by packed code).
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t m);

class FieldElement;

namespace detail {
struct FieldTables;
}

/// Shared, immutable handle to a field and its arithmetic tables. Copying is
/// cheap; copies compare equal.
class Field {
   public:
    explicit Field(const FieldSpec& spec);
    static Field prime(std::uint32_t p) { return Field(FieldSpec::prime(p)); }
    static Field of_order(std::uint32_t q) { return Field(FieldSpec::of_order(q)); }

    const FieldSpec& spec() const noexcept;
    std::uint32_t p() const noexcept { return spec().p(); }
    std::uint32_t m() const noexcept { return spec().m(); }
    std::uint32_t order() const noexcept { return spec().order(); }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_code(Code c) const;
    /// Reduces a non-negative integer into the prime subfield.
    FieldElement from_int(std::uint64_t v) const;
    FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;

    /// The generator of F_q^* used for the log tables (smallest by code).
    FieldElement primitive_element() const;

    /// All q elements in increasing packed-code order; zero first.
    std::vector<FieldElement> elements() const;
    /// F_q^*, i.e. elements() without zero.
    std::vector<FieldElement> nonzero_elements() const;

    /// Element literal: decimal integer for prime fields, `[c0,c1,...]` for
    /// extensions. Throws std::invalid_argument on malformed input.
    FieldElement parse(std::string_view text) const;
    std::string format(Code c) const;
    std::string name() const;

    // Code-level arithmetic for hot loops; no field checks.
    Code add(Code a, Code b) const noexcept;
    Code sub(Code a, Code b) const noexcept;
    Code neg(Code a) const noexcept;
    Code mul(Code a, Code b) const noexcept;
    Code inv(Code a) const;
    Code pow(Code a, std::uint64_t e) const noexcept;
    /// y -> y^(p^j).
    Code frobenius(Code a, std::uint32_t j) const noexcept;

    bool same_as(const Field& other) const noexcept;
    friend bool operator==(const Field& a, const Field& b) noexcept { return a.same_as(b); }

   private:
    std::shared_ptr<const detail::FieldTables> tables_;
};

class FieldElement {
   public:
    FieldElement(Field field, Code code) : field_(std::move(field)), code_(code) {}

    const Field& field() const noexcept { return field_; }
    Code code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }
    std::vector<std::uint32_t> coeffs() const;

    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement frobenius(std::uint32_t j = 1) const;

    FieldElement operator-() const { return {field_, field_.neg(code_)}; }
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.code_ == b.code_ && a.field_ == b.field_;
    }
    /// Orders by packed code; only meaningful within one field.
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept {
        return a.code_ <=> b.code_;
    }

    std::string to_string() const { return field_.format(code_); }

   private:
    void check_same_field(const FieldElement& other) const;

    Field field_;
    Code code_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace rsperm
