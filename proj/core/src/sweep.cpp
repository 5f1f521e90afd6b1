#include "rsperm/sweep.hpp"

#include <algorithm>
#include <map>

#include "rsperm/random.hpp"

namespace rsperm {

std::size_t SweepResult::passed() const {
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(), [](const SweepInstance& s) { return s.passed(); }));
}

SweepResult run_sweep(const SweepConfig& config) {
    SweepResult result;
    result.rng = std::string(Rng::algorithm);
    result.seed = config.seed;

    std::vector<std::uint32_t> orders;
    for (auto q : config.field_orders)
        if (q >= config.min_n) orders.push_back(q);
    if (config.trials > 0 && orders.empty())
        throw std::invalid_argument("no field order admits the minimum length");

    Rng rng(config.seed);
    std::map<std::uint32_t, Field> fields;
    for (std::size_t t = 0; t < config.trials; ++t) {
        const std::uint32_t q = orders[rng.below(orders.size())];
        auto it = fields.find(q);
        if (it == fields.end()) it = fields.emplace(q, Field::of_order(q)).first;
        const Field& F = it->second;

        const std::size_t n = rng.between(config.min_n, std::min<std::size_t>(config.max_n, q));
        const EvaluationSet A = random_evaluation_set(F, n, rng);
        const std::size_t k = rng.between(2, n - 2);

        SweepInstance inst;
        inst.trial = t + 1;
        inst.spec = F.spec();
        for (const auto& a : A.points()) inst.points.push_back(a.to_string());
        inst.n = n;
        inst.k = k;

        const auto report = check_theorem(A, k, config.search);
        inst.order = report.group.order;
        inst.affine_order = report.affine.size();
        inst.theorem_ok = report.in_range && report.equal && report.affine_contained;
        inst.degree_ok = report.all_degree_one && report.degree_bound_holds;

        const auto C = rs_code(A, k);
        const auto dual_group = permutation_group(dual_code(C), config.search);
        inst.dual_order = dual_group.size();
        inst.duality_ok = dual_group == report.group.permutations();

        result.instances.push_back(std::move(inst));
    }
    return result;
}

}  // namespace rsperm
