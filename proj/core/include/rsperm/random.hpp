#pragma once

// Seeded sampling with results that do not depend on the standard library
// implementation: std::mt19937_64 output is fully specified, and bounded
// draws use rejection sampling instead of std::uniform_int_distribution.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "rsperm/gf.hpp"
#include "rsperm/permutation.hpp"
#include "rsperm/poly.hpp"

namespace rsperm {

class Rng {
   public:
    static constexpr std::string_view algorithm = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

   private:
    std::mt19937_64 engine_;
};

Permutation random_permutation(std::size_t n, Rng& rng);

/// n distinct points of the field in random order.
EvaluationSet random_evaluation_set(const Field& field, std::size_t n, Rng& rng);

FieldElement random_element(const Field& field, Rng& rng);
FieldElement random_nonzero(const Field& field, Rng& rng);

/// Uniform over polynomials of degree < bound (the zero polynomial included).
Polynomial random_polynomial(const Field& field, std::size_t bound, Rng& rng);

}  // namespace rsperm
