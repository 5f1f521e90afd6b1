#pragma once

// Linear codes over F_q as row spaces, stored through their reduced row
// echelon basis so that equality of codes is equality of rref matrices.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rsperm/gf.hpp"
#include "rsperm/permutation.hpp"
#include "rsperm/poly.hpp"

namespace rsperm {

using Vector = std::vector<FieldElement>;

/// Rows of equal length n over one field; rows need not be independent.
class GeneratorMatrix {
   public:
    GeneratorMatrix(Field field, std::size_t n, std::vector<Vector> rows = {});

    const Field& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    const std::vector<Vector>& rows() const noexcept { return rows_; }
    const Vector& row(std::size_t r) const { return rows_[r]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }

    /// Raw packed codes, row-major.
    std::vector<std::vector<Code>> codes() const;

    friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

    /// One row per line, entries separated by spaces.
    std::string to_string() const;

   private:
    Field field_;
    std::size_t n_;
    std::vector<Vector> rows_;
};

/// Reduced row echelon form; zero rows are dropped.
GeneratorMatrix rref(const GeneratorMatrix& M);
std::size_t rank(const GeneratorMatrix& M);

class LinearCode {
   public:
    /// Throws std::invalid_argument if the rows are linearly dependent.
    explicit LinearCode(const GeneratorMatrix& G);
    /// The row space of an arbitrary spanning set.
    static LinearCode span(const GeneratorMatrix& G);
    static LinearCode zero(const Field& field, std::size_t n);
    static LinearCode full_space(const Field& field, std::size_t n);

    const Field& field() const noexcept { return rref_.field(); }
    std::size_t n() const noexcept { return rref_.n(); }
    std::size_t k() const noexcept { return rref_.row_count(); }
    const GeneratorMatrix& rref() const noexcept { return rref_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    /// (n - k) x n basis of the dual code read off the rref (not itself reduced).
    const GeneratorMatrix& parity_check() const noexcept { return parity_; }

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.rref_ == b.rref_; }

   private:
    struct Reduced {};
    LinearCode(Reduced, GeneratorMatrix reduced);

    GeneratorMatrix rref_;
    std::vector<std::size_t> pivots_;
    GeneratorMatrix parity_;
};

bool contains(const LinearCode& C, std::span<const FieldElement> v);

/// RS(A, k): evaluations of x^0, ..., x^{k-1} on A.
LinearCode rs_code(const EvaluationSet& A, std::size_t k);
GeneratorMatrix rs_generator(const EvaluationSet& A, std::size_t k);

LinearCode dual_code(const LinearCode& C);

/// g(a_j) = (prod_{i != j} (a_j - a_i))^{-1}; RS(A, k)^perp = g * RS(A, n - k).
Vector rs_dual_multiplier(const EvaluationSet& A);

/// { v * c : c in C } for an everywhere-nonzero column multiplier v.
LinearCode star_product(std::span<const FieldElement> v, const LinearCode& C);

/// pi(C) with pi(c)_i = c_{pi(i)}.
LinearCode apply_perm(const LinearCode& C, const Permutation& pi);

/// Componentwise y -> y^(p^j) on every codeword, 1 <= j < m.
LinearCode apply_field_automorphism(const LinearCode& C, std::uint32_t j);

/// Minimum Hamming weight of a nonzero codeword by enumerating all q^k - 1
/// codewords; throws std::invalid_argument when q^k exceeds max_codewords.
/// Returns n + 1 for the zero code.
std::size_t minimum_distance(const LinearCode& C, std::uint64_t max_codewords = 100000);

}  // namespace rsperm
