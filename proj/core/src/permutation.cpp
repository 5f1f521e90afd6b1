#include "rsperm/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace rsperm {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
        if (v >= images_.size() || seen[v]) throw std::invalid_argument("not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& images) {
    std::vector<std::size_t> zero_based;
    zero_based.reserve(images.size());
    for (auto v : images) {
        if (v == 0) throw std::invalid_argument("1-based permutation entry is 0");
        zero_based.push_back(v - 1);
    }
    return Permutation(std::move(zero_based));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
    Permutation out = identity(n);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        const auto& cyc = *it;
        std::vector<std::size_t> img = identity(n).images_;
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            const auto from = cyc[j], to = cyc[(j + 1) % cyc.size()];
            if (from == 0 || from > n || to == 0 || to > n)
                throw std::invalid_argument("cycle entry out of range");
            img[from - 1] = to - 1;
        }
        out = Permutation(std::move(img)) * out;
    }
    return out;
}

std::vector<std::size_t> Permutation::one_based() const {
    std::vector<std::size_t> out(images_);
    for (auto& v : out) ++v;
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different degree");
    std::vector<std::size_t> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.images_[b.images_[i]];
    return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(images_[i] + 1);
    }
    return out + "]";
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (done[start] || images_[start] == start) continue;
        out += '(';
        std::size_t i = start;
        bool first = true;
        while (!done[i]) {
            done[i] = true;
            if (!first) out += ' ';
            out += std::to_string(i + 1);
            first = false;
            i = images_[i];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

}  // namespace rsperm
