#include "rsperm/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsperm {

namespace {

using RawMatrix = std::vector<std::vector<Code>>;

struct Echelon {
    RawMatrix rows;
    std::vector<std::size_t> pivots;
};

// In-place Gauss-Jordan elimination; zero rows are dropped.
Echelon reduce(const Field& F, RawMatrix M, std::size_t n) {
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < M.size(); ++c) {
        std::size_t piv = r;
        while (piv < M.size() && M[piv][c] == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[r], M[piv]);
        const Code inv = F.inv(M[r][c]);
        for (auto& x : M[r]) x = F.mul(x, inv);
        for (std::size_t i = 0; i < M.size(); ++i) {
            if (i == r || M[i][c] == 0) continue;
            const Code f = M[i][c];
            for (std::size_t j = 0; j < n; ++j) M[i][j] = F.sub(M[i][j], F.mul(f, M[r][j]));
        }
        out.pivots.push_back(c);
        ++r;
    }
    M.resize(r);
    out.rows = std::move(M);
    return out;
}

GeneratorMatrix from_raw(const Field& F, std::size_t n, const RawMatrix& M) {
    std::vector<Vector> rows;
    rows.reserve(M.size());
    for (const auto& raw : M) {
        Vector row;
        row.reserve(n);
        for (Code c : raw) row.emplace_back(F, c);
        rows.push_back(std::move(row));
    }
    return GeneratorMatrix(F, n, std::move(rows));
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(Field field, std::size_t n, std::vector<Vector> rows)
    : field_(std::move(field)), n_(n), rows_(std::move(rows)) {
    for (const auto& row : rows_) {
        if (row.size() != n_) throw std::invalid_argument("generator row has wrong length");
        for (const auto& x : row)
            if (!(x.field() == field_)) throw FieldMismatch("matrix entry from a different field");
    }
}

std::vector<std::vector<Code>> GeneratorMatrix::codes() const {
    RawMatrix out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
        std::vector<Code> raw;
        raw.reserve(n_);
        for (const auto& x : row) raw.push_back(x.code());
        out.push_back(std::move(raw));
    }
    return out;
}

std::string GeneratorMatrix::to_string() const {
    std::string out;
    for (const auto& row : rows_) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += row[j].to_string();
        }
        out += '\n';
    }
    return out;
}

GeneratorMatrix rref(const GeneratorMatrix& M) {
    return from_raw(M.field(), M.n(), reduce(M.field(), M.codes(), M.n()).rows);
}

std::size_t rank(const GeneratorMatrix& M) {
    return reduce(M.field(), M.codes(), M.n()).pivots.size();
}

LinearCode::LinearCode(Reduced, GeneratorMatrix reduced)
    : rref_(std::move(reduced)), parity_(rref_.field(), rref_.n()) {
    const Field& F = rref_.field();
    const std::size_t n = rref_.n();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < rref_.row_count(); ++r) {
        std::size_t c = 0;
        while (rref_(r, c).is_zero()) ++c;
        pivots_.push_back(c);
        is_pivot[c] = true;
    }
    // For each free column f: e_f - sum_r rref[r][f] e_{pivot_r}.
    std::vector<Vector> h;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n, F.zero());
        v[f] = F.one();
        for (std::size_t r = 0; r < pivots_.size(); ++r) v[pivots_[r]] = -rref_(r, f);
        h.push_back(std::move(v));
    }
    parity_ = GeneratorMatrix(F, n, std::move(h));
}

LinearCode::LinearCode(const GeneratorMatrix& G) : LinearCode(span(G)) {
    if (k() != G.row_count())
        throw std::invalid_argument("generator rows are linearly dependent (rank " +
                                    std::to_string(k()) + " < " + std::to_string(G.row_count()) +
                                    ")");
}

LinearCode LinearCode::span(const GeneratorMatrix& G) { return LinearCode(Reduced{}, rsperm::rref(G)); }

LinearCode LinearCode::zero(const Field& field, std::size_t n) {
    return LinearCode(Reduced{}, GeneratorMatrix(field, n));
}

LinearCode LinearCode::full_space(const Field& field, std::size_t n) {
    std::vector<Vector> rows(n, Vector(n, field.zero()));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = field.one();
    return LinearCode(Reduced{}, GeneratorMatrix(field, n, std::move(rows)));
}

bool contains(const LinearCode& C, std::span<const FieldElement> v) {
    if (v.size() != C.n())
        throw std::invalid_argument("vector length " + std::to_string(v.size()) +
                                    " does not match code length " + std::to_string(C.n()));
    const Field& F = C.field();
    for (const auto& x : v)
        if (!(x.field() == F)) throw FieldMismatch("vector entry from a different field");
    for (const auto& h : C.parity_check().rows()) {
        Code acc = 0;
        for (std::size_t i = 0; i < v.size(); ++i) acc = F.add(acc, F.mul(h[i].code(), v[i].code()));
        if (acc != 0) return false;
    }
    return true;
}

GeneratorMatrix rs_generator(const EvaluationSet& A, std::size_t k) {
    const Field& F = A.field();
    std::vector<Vector> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) rows.push_back(eval_vector(Polynomial::monomial(F.one(), i), A));
    return GeneratorMatrix(F, A.size(), std::move(rows));
}

LinearCode rs_code(const EvaluationSet& A, std::size_t k) {
    if (k < 1 || k > A.size())
        throw std::invalid_argument("RS dimension k = " + std::to_string(k) + " outside [1, " +
                                    std::to_string(A.size()) + "]");
    return LinearCode(rs_generator(A, k));
}

LinearCode dual_code(const LinearCode& C) { return LinearCode::span(C.parity_check()); }

Vector rs_dual_multiplier(const EvaluationSet& A) {
    const Field& F = A.field();
    Vector g;
    g.reserve(A.size());
    for (std::size_t j = 0; j < A.size(); ++j) {
        FieldElement prod = F.one();
        for (std::size_t i = 0; i < A.size(); ++i)
            if (i != j) prod *= A[j] - A[i];
        g.push_back(prod.inv());
    }
    return g;
}

LinearCode star_product(std::span<const FieldElement> v, const LinearCode& C) {
    if (v.size() != C.n()) throw std::invalid_argument("multiplier length does not match code length");
    for (const auto& x : v)
        if (x.is_zero()) throw std::invalid_argument("star product multiplier has a zero entry");
    std::vector<Vector> rows = C.rref().rows();
    for (auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) row[i] *= v[i];
    return LinearCode(GeneratorMatrix(C.field(), C.n(), std::move(rows)));
}

LinearCode apply_perm(const LinearCode& C, const Permutation& pi) {
    if (pi.size() != C.n())
        throw std::invalid_argument("permutation degree " + std::to_string(pi.size()) +
                                    " does not match code length " + std::to_string(C.n()));
    std::vector<Vector> rows;
    rows.reserve(C.k());
    for (const auto& row : C.rref().rows()) rows.push_back(permute(row, pi));
    return LinearCode(GeneratorMatrix(C.field(), C.n(), std::move(rows)));
}

LinearCode apply_field_automorphism(const LinearCode& C, std::uint32_t j) {
    const Field& F = C.field();
    if (F.m() == 1) throw std::invalid_argument("prime fields have no nontrivial automorphism");
    if (j < 1 || j >= F.m())
        throw std::invalid_argument("automorphism index must lie in [1, m-1]");
    std::vector<Vector> rows = C.rref().rows();
    for (auto& row : rows)
        for (auto& x : row) x = x.frobenius(j);
    return LinearCode(GeneratorMatrix(F, C.n(), std::move(rows)));
}

std::size_t minimum_distance(const LinearCode& C, std::uint64_t max_codewords) {
    const Field& F = C.field();
    const std::uint64_t q = F.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < C.k(); ++i) {
        total *= q;
        if (total > max_codewords)
            throw std::invalid_argument("too many codewords to enumerate");
    }
    const auto G = C.rref().codes();
    std::size_t best = C.n() + 1;
    std::vector<Code> msg(C.k(), 0);
    std::vector<Code> word(C.n());
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (auto& m : msg) {
            m = static_cast<Code>(t % q);
            t /= q;
        }
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t r = 0; r < C.k(); ++r) {
            if (msg[r] == 0) continue;
            for (std::size_t i = 0; i < C.n(); ++i) word[i] = F.add(word[i], F.mul(msg[r], G[r][i]));
        }
        std::size_t w = 0;
        for (Code c : word) w += c != 0;
        best = std::min(best, w);
    }
    return best;
}

}  // namespace rsperm
