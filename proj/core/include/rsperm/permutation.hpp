#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rsperm {

/// Bijection of {0, ..., n-1}; displayed 1-based.
///
/// Composition is (a * b)(i) = a(b(i)). Acting on a vector by coordinate
/// pull-back, pi(v)_i = v_{pi(i)}, so the action anti-composes:
/// (a * b)(v) = b(a(v)).
class Permutation {
   public:
    /// 0-based images; throws std::invalid_argument unless a bijection.
    explicit Permutation(std::vector<std::size_t> images);
    static Permutation identity(std::size_t n);
    static Permutation from_one_based(const std::vector<std::size_t>& images);
    /// Product of disjoint or overlapping cycles given 1-based, applied right to left.
    static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const noexcept { return images_; }
    std::vector<std::size_t> one_based() const;

    Permutation inverse() const;
    bool is_identity() const noexcept;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

    /// One-line notation, e.g. `[2,3,1,4]`.
    std::string to_string() const;
    /// Cycle notation, e.g. `(1 2 3)`; the identity is `()`.
    std::string cycle_string() const;

   private:
    std::vector<std::size_t> images_;
};

inline Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

/// pi(v)_i = v_{pi(i)}.
template <class T>
std::vector<T> permute(std::span<const T> v, const Permutation& pi) {
    std::vector<T> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < pi.size(); ++i) out.push_back(v[pi(i)]);
    return out;
}

template <class T>
std::vector<T> permute(const std::vector<T>& v, const Permutation& pi) {
    return permute(std::span<const T>(v), pi);
}

}  // namespace rsperm
