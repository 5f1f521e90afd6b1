#include "rsperm/permgroup.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

namespace rsperm {

namespace {

using RawMatrix = std::vector<std::vector<Code>>;

// Shared read-only data for one search over a code.
struct SearchContext {
    const Field& field;
    std::size_t n;
    RawMatrix rows;    // rref of C
    RawMatrix parity;  // basis of C^perp

    // sum_i h[i] * row[pi(i)] over the parity row h, for every rref row.
    bool parity_row_ok(const std::vector<Code>& h, const std::vector<std::size_t>& images) const {
        for (const auto& row : rows) {
            Code acc = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (h[i] == 0) continue;
                acc = field.add(acc, field.mul(h[i], row[images[i]]));
            }
            if (acc != 0) return false;
        }
        return true;
    }

    bool fixes(const std::vector<std::size_t>& images) const {
        for (const auto& h : parity)
            if (!parity_row_ok(h, images)) return false;
        return true;
    }
};

// All permutations with images[0] == first, in lexicographic order.
std::vector<Permutation> scan_shard(const SearchContext& ctx, std::size_t first) {
    std::vector<Permutation> out;
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < ctx.n; ++v)
        if (v != first) rest.push_back(v);
    std::vector<std::size_t> images(ctx.n);
    images[0] = first;
    do {
        std::copy(rest.begin(), rest.end(), images.begin() + 1);
        if (ctx.fixes(images)) out.emplace_back(images);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

// Depth-first assignment in `order`; check[d] lists the parity rows whose
// support is fully assigned once order[d] is.
struct Backtracker {
    const SearchContext& ctx;
    std::vector<std::size_t> order;
    std::vector<std::vector<std::size_t>> check;
    std::vector<std::size_t> images;
    std::vector<bool> used;
    std::vector<Permutation> found;

    void run(std::size_t depth) {
        if (depth == order.size()) {
            found.emplace_back(images);
            return;
        }
        const std::size_t pos = order[depth];
        for (std::size_t v = 0; v < ctx.n; ++v) {
            if (used[v]) continue;
            assign(depth, pos, v);
        }
    }

    void assign(std::size_t depth, std::size_t pos, std::size_t v) {
        images[pos] = v;
        used[v] = true;
        bool ok = true;
        for (std::size_t j : check[depth]) {
            if (!ctx.parity_row_ok(ctx.parity[j], images)) {
                ok = false;
                break;
            }
        }
        if (ok) run(depth + 1);
        used[v] = false;
    }
};

Backtracker make_backtracker(const SearchContext& ctx) {
    const std::size_t n = ctx.n;
    // Parity rows with the smallest support first; then place their columns.
    std::vector<std::size_t> row_order(ctx.parity.size());
    std::iota(row_order.begin(), row_order.end(), std::size_t{0});
    auto support = [&](std::size_t j) {
        return std::count_if(ctx.parity[j].begin(), ctx.parity[j].end(), [](Code c) { return c != 0; });
    };
    std::stable_sort(row_order.begin(), row_order.end(),
                     [&](std::size_t a, std::size_t b) { return support(a) < support(b); });

    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    for (std::size_t j : row_order)
        for (std::size_t i = 0; i < n; ++i)
            if (ctx.parity[j][i] != 0 && !placed[i]) {
                placed[i] = true;
                order.push_back(i);
            }
    for (std::size_t i = 0; i < n; ++i)
        if (!placed[i]) order.push_back(i);

    std::vector<std::size_t> position(n);
    for (std::size_t d = 0; d < n; ++d) position[order[d]] = d;
    std::vector<std::vector<std::size_t>> check(n);
    for (std::size_t j = 0; j < ctx.parity.size(); ++j) {
        std::size_t last = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (ctx.parity[j][i] != 0) last = std::max(last, position[i]);
        check[last].push_back(j);
    }
    return Backtracker{ctx, std::move(order), std::move(check), std::vector<std::size_t>(n, 0),
                       std::vector<bool>(n, false), {}};
}

std::vector<Permutation> backtrack_shard(const SearchContext& ctx, std::size_t first) {
    Backtracker bt = make_backtracker(ctx);
    bt.assign(0, bt.order[0], first);
    return std::move(bt.found);
}

template <class Fn>
std::vector<std::vector<Permutation>> run_shards(std::size_t shards, unsigned threads, Fn fn) {
    std::vector<std::vector<Permutation>> results(shards);
    if (threads <= 1 || shards <= 1) {
        for (std::size_t s = 0; s < shards; ++s) results[s] = fn(s);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(shards));
    for (unsigned t = 0; t < count; ++t)
        pool.emplace_back([&] {
            for (std::size_t s; (s = next.fetch_add(1)) < shards;) results[s] = fn(s);
        });
    for (auto& th : pool) th.join();
    return results;
}

struct PermHash {
    std::size_t operator()(const Permutation& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto v : p.images()) h = (h ^ v) * 1099511628211ull;
        return h;
    }
};

}  // namespace

AffineMap::AffineMap(FieldElement a, FieldElement b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_zero()) throw std::invalid_argument("affine map needs a != 0");
    if (!(a_.field() == b_.field())) throw FieldMismatch("affine coefficients from different fields");
}

Polynomial perm_to_poly(const Permutation& pi, const EvaluationSet& A) {
    if (pi.size() != A.size()) throw std::invalid_argument("permutation degree does not match |A|");
    return interpolate(permute(A.points(), pi), A);
}

Permutation poly_to_perm(const Polynomial& p, const EvaluationSet& A) {
    std::vector<std::size_t> images(A.size());
    std::vector<bool> hit(A.size(), false);
    for (std::size_t i = 0; i < A.size(); ++i) {
        const auto idx = A.index_of(p(A[i]));
        if (!idx || hit[*idx])
            throw NotAPermutation(p.to_string() + " does not permute " + A.to_string());
        hit[*idx] = true;
        images[i] = *idx;
    }
    return Permutation(std::move(images));
}

bool permutes(const Polynomial& p, const EvaluationSet& A) {
    std::vector<bool> hit(A.size(), false);
    for (const auto& a : A.points()) {
        const auto idx = A.index_of(p(a));
        if (!idx || hit[*idx]) return false;
        hit[*idx] = true;
    }
    return true;
}

std::vector<AffinePermutation> affine_group(const EvaluationSet& A) {
    // a*a_1 + b must land in A, so b ranges over t - a*a_1 for t in A.
    const Field& F = A.field();
    std::vector<AffinePermutation> out;
    for (const auto& a : F.nonzero_elements()) {
        std::vector<FieldElement> offsets;
        for (const auto& t : A.points()) offsets.push_back(t - a * A[0]);
        std::sort(offsets.begin(), offsets.end());
        for (const auto& b : offsets) {
            const auto p = Polynomial::linear(a, b);
            if (permutes(p, A)) out.push_back({AffineMap(a, b), poly_to_perm(p, A)});
        }
    }
    return out;
}

bool fixes_code(const LinearCode& C, const Permutation& pi) {
    if (pi.size() != C.n()) throw std::invalid_argument("permutation degree does not match code length");
    const SearchContext ctx{C.field(), C.n(), C.rref().codes(), C.parity_check().codes()};
    return ctx.fixes(pi.images());
}

std::vector<Permutation> permutation_group(const LinearCode& C, const SearchOptions& options) {
    const std::size_t n = C.n();
    if (n > options.max_n)
        throw SearchLimitExceeded("code length " + std::to_string(n) + " exceeds search limit " +
                                  std::to_string(options.max_n));
    if (n == 0) return {Permutation::identity(0)};
    const SearchContext ctx{C.field(), n, C.rref().codes(), C.parity_check().codes()};

    std::vector<std::vector<Permutation>> shards;
    if (options.mode == SearchMode::exhaustive) {
        shards = run_shards(n, options.threads, [&](std::size_t s) { return scan_shard(ctx, s); });
    } else {
        shards = run_shards(n, options.threads, [&](std::size_t s) { return backtrack_shard(ctx, s); });
    }
    std::vector<Permutation> out;
    for (auto& s : shards)
        for (auto& p : s) out.push_back(std::move(p));
    if (options.mode == SearchMode::backtrack) std::sort(out.begin(), out.end());
    return out;
}

IsomorphismHint isomorphism_hint(std::span<const Permutation> group) {
    IsomorphismHint hint;
    hint.order = group.size();
    if (group.empty()) return hint;

    // Greedy generating set: add any element outside the subgroup so far.
    std::vector<Permutation> gens;
    std::unordered_set<Permutation, PermHash> sub{Permutation::identity(group.front().size())};
    for (const auto& g : group) {
        if (sub.contains(g)) continue;
        gens.push_back(g);
        std::vector<Permutation> frontier(sub.begin(), sub.end());
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& h : frontier)
                for (const auto& s : gens) {
                    Permutation prod = h * s;
                    if (sub.insert(prod).second) next.push_back(std::move(prod));
                }
            frontier = std::move(next);
        }
    }
    for (std::size_t i = 0; i < gens.size() && hint.abelian; ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!(gens[i] * gens[j] == gens[j] * gens[i])) {
                hint.abelian = false;
                break;
            }
    if (hint.order == 6 && !hint.abelian) hint.label = "S_3";
    return hint;
}

std::vector<Permutation> GroupReport::permutations() const {
    std::vector<Permutation> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(e.perm);
    return out;
}

GroupReport brute_force_perm_group(const LinearCode& C, const EvaluationSet& A,
                                   const SearchOptions& options) {
    if (C.n() != A.size()) throw std::invalid_argument("code length does not match |A|");
    if (!(C.field() == A.field())) throw FieldMismatch("code and evaluation set over different fields");
    const auto group = permutation_group(C, options);

    GroupReport report;
    report.n = C.n();
    report.k = C.k();
    report.order = group.size();
    report.hint = isomorphism_hint(group);

    const auto basis = indicator_functions(A);
    report.elements.reserve(group.size());
    for (const auto& pi : group) {
        Polynomial p(A.field());
        for (std::size_t i = 0; i < A.size(); ++i) p += basis[i] * A[pi(i)];
        const Degree d = p.degree();
        report.elements.push_back({pi, std::move(p), d, d == Degree(1)});
    }

    const auto affine = affine_group(A);
    report.affine_order = affine.size();
    std::vector<Permutation> affine_perms;
    for (const auto& ap : affine) affine_perms.push_back(ap.perm);
    std::sort(affine_perms.begin(), affine_perms.end());
    report.is_affine_equal = affine_perms == group;
    return report;
}

VerificationReport check_theorem(const EvaluationSet& A, std::size_t k, const SearchOptions& options) {
    VerificationReport v;
    v.n = A.size();
    v.k = k;
    v.in_range = 1 < k && k + 1 < v.n;
    if (!v.in_range)
        v.warning = "k = " + std::to_string(k) + " lies outside 1 < k < n-1 = " +
                    std::to_string(v.n - 1) + "; equality is reported, not asserted";

    v.group = brute_force_perm_group(rs_code(A, k), A, options);
    for (const auto& ap : affine_group(A)) v.affine.push_back(ap.perm);
    std::sort(v.affine.begin(), v.affine.end());

    const auto group = v.group.permutations();
    v.equal = v.affine == group;
    v.affine_contained = std::includes(group.begin(), group.end(), v.affine.begin(), v.affine.end());
    v.all_degree_one = std::all_of(v.group.elements.begin(), v.group.elements.end(),
                                   [](const GroupMember& m) { return m.degree == Degree(1); });
    const std::size_t bound = std::min(k, v.n - k);
    v.degree_bound_holds = std::all_of(v.group.elements.begin(), v.group.elements.end(),
                                       [&](const GroupMember& m) { return m.degree < Degree(bound); });
    return v;
}

DegreeProfile degree_profile(const LinearCode& C, const EvaluationSet& A, const SearchOptions& options) {
    const auto report = brute_force_perm_group(C, A, options);
    DegreeProfile profile;
    for (const auto& m : report.elements) profile.degrees.emplace_back(m.perm, m.degree);
    const std::size_t n = C.n(), k = C.k();
    profile.bound_applicable = 1 < k && k + 1 < n;
    profile.bound = std::min(k, n - k);
    if (profile.bound_applicable)
        profile.bound_holds = std::all_of(profile.degrees.begin(), profile.degrees.end(),
                                          [&](const auto& e) { return e.second < Degree(profile.bound); });
    return profile;
}

bool group_closure_check(std::span<const Permutation> elements) {
    if (elements.empty()) return false;
    const std::size_t n = elements.front().size();
    std::set<Permutation> set;
    for (const auto& p : elements) {
        if (p.size() != n) return false;
        set.insert(p);
    }
    if (!set.contains(Permutation::identity(n))) return false;
    for (const auto& a : set) {
        if (!set.contains(a.inverse())) return false;
        for (const auto& b : set)
            if (!set.contains(a * b)) return false;
    }
    return true;
}

bool homomorphism_check(const EvaluationSet& A, const Permutation& pi1, const Permutation& pi2) {
    const auto lhs = compose_mod_A(perm_to_poly(pi1, A), perm_to_poly(pi2, A), A);
    return lhs == perm_to_poly(pi1 * pi2, A);
}

}  // namespace rsperm
