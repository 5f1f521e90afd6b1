#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rsperm/codes.hpp"
#include "rsperm/random.hpp"

using namespace rsperm;

namespace {

const Field F13 = Field::prime(13);

Vector vec(const Field& F, std::initializer_list<std::uint64_t> vs) {
    Vector out;
    for (auto v : vs) out.push_back(F.from_int(v));
    return out;
}

EvaluationSet f13_set() {
    return EvaluationSet(F13, vec(F13, {0, 1, 4, 6}));
}

GeneratorMatrix matrix(const Field& F, std::size_t n, std::initializer_list<std::initializer_list<std::uint64_t>> rows) {
    std::vector<Vector> rs;
    for (auto r : rows) rs.push_back(vec(F, r));
    return GeneratorMatrix(F, n, rs);
}

LinearCode random_code(const Field& F, std::size_t n, std::size_t k, Rng& rng) {
    while (true) {
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < k; ++r) {
            Vector row;
            for (std::size_t i = 0; i < n; ++i) row.push_back(random_element(F, rng));
            rows.push_back(std::move(row));
        }
        GeneratorMatrix G(F, n, rows);
        if (rank(G) == k) return LinearCode(G);
    }
}

}  // namespace

TEST(Rref, IdentityIsFixed) {
    const auto I = matrix(F13, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(rref(I), I);
}

TEST(Rref, F13GeneratorMatrix) {
    const auto G = rs_generator(f13_set(), 3);
    EXPECT_EQ(G, matrix(F13, 4, {{1, 1, 1, 1}, {0, 1, 4, 6}, {0, 1, 3, 10}}));
    // Hand elimination mod 13: the last column is 9 in every row.
    EXPECT_EQ(rref(G), matrix(F13, 4, {{1, 0, 0, 9}, {0, 1, 0, 9}, {0, 0, 1, 9}}));
}

TEST(Rref, RowSpaceInvariance) {
    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
        const auto C = random_code(F13, 6, 3, rng);
        auto rows = C.rref().rows();
        rows.push_back(rows.front());
        rows.push_back(Vector(6, F13.zero()));
        const GeneratorMatrix M(F13, 6, rows);
        EXPECT_EQ(rref(M), C.rref());
        EXPECT_EQ(rref(rref(M)), rref(M));
        EXPECT_EQ(rank(M), 3u);
    }
}

TEST(Rref, CanonicalInvariants) {
    Rng rng(2);
    for (int t = 0; t < 50; ++t) {
        const auto C = random_code(F13, 7, 1 + t % 6, rng);
        const auto& R = C.rref();
        for (std::size_t r = 0; r < R.row_count(); ++r) {
            const std::size_t piv = C.pivots()[r];
            EXPECT_TRUE(R(r, piv).is_one());
            if (r) EXPECT_GT(piv, C.pivots()[r - 1]);
            for (std::size_t o = 0; o < R.row_count(); ++o)
                if (o != r) EXPECT_TRUE(R(o, piv).is_zero());
            for (std::size_t c = 0; c < piv; ++c) EXPECT_TRUE(R(r, c).is_zero());
        }
    }
}

TEST(LinearCode, DependentRowsRejected) {
    EXPECT_THROW(LinearCode(matrix(F13, 3, {{1, 2, 3}, {2, 4, 6}})), std::invalid_argument);
    EXPECT_NO_THROW(LinearCode::span(matrix(F13, 3, {{1, 2, 3}, {2, 4, 6}})));
    EXPECT_EQ(LinearCode::span(matrix(F13, 3, {{1, 2, 3}, {2, 4, 6}})).k(), 1u);
}

TEST(RsCode, F13ExampleAndBoundaries) {
    const auto A = f13_set();
    EXPECT_EQ(rs_code(A, 3).k(), 3u);
    EXPECT_EQ(rs_code(A, 1).rref(), matrix(F13, 4, {{1, 1, 1, 1}}));
    EXPECT_EQ(rs_code(A, 4), LinearCode::full_space(F13, 4));
    EXPECT_THROW(rs_code(A, 0), std::invalid_argument);
    EXPECT_THROW(rs_code(A, 5), std::invalid_argument);
}

TEST(RsCode, MaximumDistanceSeparable) {
    Rng rng(3);
    for (std::uint32_t q : {5u, 7u, 8u, 9u, 13u}) {
        const Field F = Field::of_order(q);
        for (std::size_t n = 3; n <= std::min<std::size_t>(q, 7); ++n) {
            const auto A = random_evaluation_set(F, n, rng);
            for (std::size_t k = 1; k <= n; ++k) {
                std::uint64_t words = 1;
                for (std::size_t i = 0; i < k; ++i) words *= q;
                if (words > 100000) continue;
                EXPECT_EQ(minimum_distance(rs_code(A, k)), n - k + 1) << F.name() << " n=" << n << " k=" << k;
            }
        }
    }
}

TEST(DualCode, Examples) {
    const auto rep = LinearCode(matrix(F13, 4, {{1, 1, 1, 1}}));
    const auto dual_rep = dual_code(rep);
    EXPECT_EQ(dual_rep.k(), 3u);
    EXPECT_TRUE(contains(dual_rep, vec(F13, {1, 12, 0, 0})));
    EXPECT_TRUE(contains(dual_rep, vec(F13, {3, 4, 5, 1})));  // sums to 13
    EXPECT_FALSE(contains(dual_rep, vec(F13, {1, 0, 0, 0})));

    const auto C = rs_code(f13_set(), 3);
    const auto D = dual_code(C);
    EXPECT_EQ(D.k(), 1u);
    EXPECT_EQ(D, LinearCode(matrix(F13, 4, {{7, 7, 7, 5}})));
    const auto G = rs_generator(f13_set(), 3);
    for (const auto& row : G.rows()) {
        const Vector w = vec(F13, {7, 7, 7, 5});
        Code acc = 0;
        for (std::size_t i = 0; i < 4; ++i) acc = F13.add(acc, F13.mul(row[i].code(), w[i].code()));
        EXPECT_EQ(acc, 0u);
    }
}

TEST(DualCode, InvolutionAndDimension) {
    Rng rng(4);
    for (std::uint32_t q : {2u, 4u, 5u, 9u, 13u}) {
        const Field F = Field::of_order(q);
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 2 + rng.below(6);
            const std::size_t k = rng.below(n + 1);
            const auto C = k == 0 ? LinearCode::zero(F, n) : random_code(F, n, k, rng);
            const auto D = dual_code(C);
            EXPECT_EQ(D.k(), n - k);
            EXPECT_EQ(dual_code(D), C);
            for (const auto& h : D.rref().rows())
                for (const auto& c : C.rref().rows()) {
                    Code acc = 0;
                    for (std::size_t i = 0; i < n; ++i) acc = F.add(acc, F.mul(h[i].code(), c[i].code()));
                    EXPECT_EQ(acc, 0u);
                }
        }
    }
}

TEST(Contains, Examples) {
    const auto C = rs_code(f13_set(), 3);
    const auto G = rs_generator(f13_set(), 3);
    for (const auto& row : G.rows()) EXPECT_TRUE(contains(C, row));
    EXPECT_FALSE(contains(C, vec(F13, {7, 7, 7, 5})));
    EXPECT_TRUE(contains(C, Vector(4, F13.zero())));
    EXPECT_THROW(contains(C, vec(F13, {1, 2, 3})), std::invalid_argument);
}

TEST(Contains, AgreesWithCodewordSets) {
    Rng rng(5);
    const Field F = Field::of_order(4);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 4, k = 1 + rng.below(3);
        const auto C = random_code(F, n, k, rng);
        const auto words = oracle::codewords(C.rref());
        for (Code a = 0; a < 4; ++a)
            for (Code b = 0; b < 4; ++b)
                for (Code c = 0; c < 4; ++c)
                    for (Code d = 0; d < 4; ++d) {
                        const Vector v{F.from_code(a), F.from_code(b), F.from_code(c), F.from_code(d)};
                        EXPECT_EQ(contains(C, v), words.contains({a, b, c, d}));
                    }
    }
}

TEST(DualMultiplier, F13Set) {
    // Products of differences at each point: 2, 2, 2, 8 mod 13.
    EXPECT_EQ(rs_dual_multiplier(f13_set()), vec(F13, {7, 7, 7, 5}));
}

TEST(DualMultiplier, FullFieldIsMinusOne) {
    for (std::uint32_t q : {5u, 7u, 13u}) {
        const Field F = Field::prime(q);
        const EvaluationSet all(F, F.elements());
        // prod_{c != 0} c = -1 in F_q
        FieldElement prod = F.one();
        for (const auto& c : F.nonzero_elements()) prod *= c;
        EXPECT_EQ(prod, -F.one());
        for (const auto& g : rs_dual_multiplier(all)) EXPECT_EQ(g, -F.one()) << F.name();
    }
}

TEST(DualMultiplier, NonzeroAndMatchesDual) {
    Rng rng(6);
    for (int t = 0; t < 50; ++t) {
        const Field F = Field::of_order(t % 2 ? 16 : 13);
        const auto A = random_evaluation_set(F, 2 + rng.below(8), rng);
        const auto g = rs_dual_multiplier(A);
        for (const auto& x : g) EXPECT_FALSE(x.is_zero());
        for (std::size_t k = 1; k < A.size(); ++k)
            EXPECT_EQ(star_product(g, rs_code(A, A.size() - k)).rref(), dual_code(rs_code(A, k)).rref());
    }
}

TEST(StarProduct, Identities) {
    const auto C = rs_code(f13_set(), 2);
    EXPECT_EQ(star_product(Vector(4, F13.one()), C), C);
    const Vector v = vec(F13, {2, 3, 5, 7});
    Vector v_inv;
    for (const auto& x : v) v_inv.push_back(x.inv());
    EXPECT_EQ(star_product(v_inv, star_product(v, C)), C);
    EXPECT_EQ(star_product(v, C).k(), C.k());
    EXPECT_THROW(star_product(vec(F13, {1, 0, 1, 1}), C), std::invalid_argument);
    EXPECT_EQ(star_product(rs_dual_multiplier(f13_set()), rs_code(f13_set(), 1)),
              dual_code(rs_code(f13_set(), 3)));
}

TEST(ApplyPerm, Examples) {
    const auto C = rs_code(f13_set(), 3);
    EXPECT_EQ(apply_perm(C, Permutation::identity(4)), C);
    EXPECT_EQ(apply_perm(C, Permutation::from_cycles(4, {{1, 2, 3}})), C);
    EXPECT_EQ(apply_perm(LinearCode::full_space(F13, 4), Permutation::from_cycles(4, {{1, 4}})),
              LinearCode::full_space(F13, 4));
    EXPECT_NE(apply_perm(rs_code(f13_set(), 2), Permutation::from_cycles(4, {{1, 2}})),
              rs_code(f13_set(), 2));
    EXPECT_THROW(apply_perm(C, Permutation::identity(3)), std::invalid_argument);
}

TEST(ApplyPerm, CommutingDiagram) {
    // pi(f(A)) = f(pi(A)), with pi(A)_i = a_{pi(i)}.
    Rng rng(8);
    for (int t = 0; t < 50; ++t) {
        const auto A = random_evaluation_set(F13, 6, rng);
        const auto f = random_polynomial(F13, 6, rng);
        const auto pi = random_permutation(6, rng);
        const EvaluationSet piA(F13, permute(A.points(), pi));
        EXPECT_EQ(permute(eval_vector(f, A), pi), eval_vector(f, piA));
        if (!f.is_zero()) {
            const LinearCode line(GeneratorMatrix(F13, 6, {eval_vector(f, A)}));
            EXPECT_EQ(apply_perm(line, pi), LinearCode(GeneratorMatrix(F13, 6, {eval_vector(f, piA)})));
        }
    }
}

TEST(FieldAutomorphism, F9Example) {
    const Field F(FieldSpec::extension(3, {2, 2, 1}));
    const auto alpha = F.from_coeffs({0, 1});
    const EvaluationSet A(F, {F.zero(), F.one(), F.from_int(2), alpha.pow(2), alpha.pow(6)});
    EXPECT_EQ(A[3], F.from_coeffs({1, 1}));
    EXPECT_EQ(A[4], F.from_coeffs({2, 2}));
    const auto C = rs_code(A, 4);
    EXPECT_EQ(apply_field_automorphism(C, 1), C);
    const auto D = rs_code(A, 3);
    EXPECT_NE(apply_field_automorphism(D, 1), D);
    EXPECT_THROW(apply_field_automorphism(C, 0), std::invalid_argument);
    EXPECT_THROW(apply_field_automorphism(C, 2), std::invalid_argument);
    EXPECT_THROW(apply_field_automorphism(rs_code(f13_set(), 2), 1), std::invalid_argument);
}

TEST(FieldAutomorphism, FixesPrimeSubfieldCodes) {
    const Field F = Field::of_order(16);
    Rng rng(9);
    for (int t = 0; t < 20; ++t) {
        std::vector<Vector> rows;
        for (int r = 0; r < 2; ++r) {
            Vector row;
            for (int i = 0; i < 5; ++i) row.push_back(F.from_int(rng.below(2)));
            rows.push_back(row);
        }
        const auto C = LinearCode::span(GeneratorMatrix(F, 5, rows));
        for (std::uint32_t j = 1; j < 4; ++j) EXPECT_EQ(apply_field_automorphism(C, j), C);
    }
}

TEST(MatrixDisplay, RowsOfLiterals) {
    EXPECT_EQ(rs_generator(f13_set(), 3).to_string(), "1 1 1 1\n0 1 4 6\n0 1 3 10\n");
}
