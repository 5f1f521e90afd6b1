#pragma once

// Seeded randomized check of the RS permutation-group characterisation:
// affine group equality, duality Per(C) = Per(C^perp) and the degree bound.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rsperm/gf.hpp"
#include "rsperm/permgroup.hpp"

namespace rsperm {

struct SweepConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 200;
    std::vector<std::uint32_t> field_orders{5, 7, 8, 9, 11, 13, 16};
    std::size_t min_n = 4;
    std::size_t max_n = 8;
    SearchOptions search;
};

struct SweepInstance {
    std::size_t trial = 0;
    FieldSpec spec = FieldSpec::prime(2);
    std::vector<std::string> points;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t order = 0;
    std::size_t dual_order = 0;
    std::size_t affine_order = 0;
    bool theorem_ok = false;
    bool duality_ok = false;
    bool degree_ok = false;

    bool passed() const { return theorem_ok && duality_ok && degree_ok; }
};

struct SweepResult {
    std::string rng;
    std::uint64_t seed = 0;
    std::vector<SweepInstance> instances;

    std::size_t passed() const;
    std::size_t failed() const { return instances.size() - passed(); }
};

/// Samples q from field_orders, n in [min_n, min(max_n, q)], distinct points
/// and k in [2, n-2]. Orders too small for min_n are skipped when sampling.
SweepResult run_sweep(const SweepConfig& config);

}  // namespace rsperm
