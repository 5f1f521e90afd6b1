#include "rsperm/random.hpp"

#include <utility>

namespace rsperm {

Permutation random_permutation(std::size_t n, Rng& rng) {
    auto images = Permutation::identity(n).images();
    rng.shuffle(images);
    return Permutation(std::move(images));
}

EvaluationSet random_evaluation_set(const Field& field, std::size_t n, Rng& rng) {
    auto all = field.elements();
    // Partial Fisher-Yates: the first n slots end up a uniform n-subset in random order.
    for (std::size_t i = 0; i < n; ++i) std::swap(all[i], all[i + rng.below(all.size() - i)]);
    all.resize(n, field.zero());
    return EvaluationSet(field, std::move(all));
}

FieldElement random_element(const Field& field, Rng& rng) {
    return field.from_code(static_cast<Code>(rng.below(field.order())));
}

FieldElement random_nonzero(const Field& field, Rng& rng) {
    return field.from_code(static_cast<Code>(1 + rng.below(field.order() - 1)));
}

Polynomial random_polynomial(const Field& field, std::size_t bound, Rng& rng) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(bound);
    for (std::size_t i = 0; i < bound; ++i) coeffs.push_back(random_element(field, rng));
    return Polynomial(field, std::move(coeffs));
}

}  // namespace rsperm
