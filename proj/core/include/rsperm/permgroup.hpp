#pragma once

// Permutation groups of codes over an evaluation set A.
//
// A permutation pi of {1..n} is tied to the unique polynomial p_pi of degree
// < n with p_pi(a_i) = a_{pi(i)}, so that pi(A) = p_pi(A). The affine
// permutations are those realised by some a*x + b with a != 0. For
// RS(A, k) with 1 < k < n-1, Per(RS(A, k)) consists of exactly the affine
// permutations; check_theorem() verifies this against an exhaustive search.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rsperm/codes.hpp"
#include "rsperm/permutation.hpp"
#include "rsperm/poly.hpp"

namespace rsperm {

class NotAPermutation : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class SearchLimitExceeded : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// p(x) = a*x + b with a != 0.
class AffineMap {
   public:
    AffineMap(FieldElement a, FieldElement b);

    const FieldElement& a() const noexcept { return a_; }
    const FieldElement& b() const noexcept { return b_; }
    FieldElement operator()(const FieldElement& x) const { return a_ * x + b_; }
    Polynomial polynomial() const { return Polynomial::linear(a_, b_); }
    std::string to_string() const { return polynomial().to_string(); }

    friend bool operator==(const AffineMap&, const AffineMap&) = default;

   private:
    FieldElement a_;
    FieldElement b_;
};

struct AffinePermutation {
    AffineMap map;
    Permutation perm;
};

/// p_pi = sum_i a_{pi(i)} L_i.
Polynomial perm_to_poly(const Permutation& pi, const EvaluationSet& A);

/// The pi with p(a_i) = a_{pi(i)}; throws NotAPermutation unless p permutes A.
Permutation poly_to_perm(const Polynomial& p, const EvaluationSet& A);

bool permutes(const Polynomial& p, const EvaluationSet& A);

/// All a*x + b permuting A, ordered by (a, b) code; identity first.
std::vector<AffinePermutation> affine_group(const EvaluationSet& A);

enum class SearchMode {
    /// Scan all n! permutations.
    exhaustive,
    /// Assign coordinates so parity rows can be checked on partial permutations.
    backtrack,
};

struct SearchOptions {
    std::size_t max_n = 10;
    SearchMode mode = SearchMode::exhaustive;
    /// Worker threads; shards are the possible images of the first coordinate.
    unsigned threads = 1;
};

/// pi(C) == C, tested by parity checks on the permuted rref rows.
bool fixes_code(const LinearCode& C, const Permutation& pi);

/// Per(C) in lexicographic order of images. Throws SearchLimitExceeded when
/// n > options.max_n.
std::vector<Permutation> permutation_group(const LinearCode& C, const SearchOptions& options = {});

struct IsomorphismHint {
    std::size_t order = 0;
    bool abelian = true;
    /// "S_3" for the non-abelian group of order 6, otherwise empty.
    std::string label;
};

IsomorphismHint isomorphism_hint(std::span<const Permutation> group);

struct GroupMember {
    Permutation perm;
    Polynomial poly;
    Degree degree;
    bool affine;
};

struct GroupReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t order = 0;
    std::size_t affine_order = 0;
    bool is_affine_equal = false;
    IsomorphismHint hint;
    std::vector<GroupMember> elements;

    std::vector<Permutation> permutations() const;
};

/// Per(C) together with p_pi and its degree for each member, and the affine
/// permutations of A for comparison.
GroupReport brute_force_perm_group(const LinearCode& C, const EvaluationSet& A,
                                   const SearchOptions& options = {});

struct VerificationReport {
    std::size_t n = 0;
    std::size_t k = 0;
    /// 1 < k < n - 1.
    bool in_range = false;
    std::string warning;
    std::vector<Permutation> affine;
    GroupReport group;
    bool equal = false;
    bool affine_contained = false;
    bool all_degree_one = false;
    /// deg p_pi < min(k, n - k) for every member.
    bool degree_bound_holds = false;

    /// Affine containment always; equality and the degree bound in range.
    bool passed() const {
        return affine_contained && (!in_range || (equal && all_degree_one && degree_bound_holds));
    }
};

/// Compares affine_group(A) with Per(RS(A, k)). Out-of-range k is computed
/// and flagged, with equality reported but not required.
VerificationReport check_theorem(const EvaluationSet& A, std::size_t k,
                                 const SearchOptions& options = {});

struct DegreeProfile {
    std::vector<std::pair<Permutation, Degree>> degrees;
    bool bound_applicable = false;
    std::size_t bound = 0;
    bool bound_holds = true;
};

DegreeProfile degree_profile(const LinearCode& C, const EvaluationSet& A,
                             const SearchOptions& options = {});

/// Identity present, closed under products and inverses.
bool group_closure_check(std::span<const Permutation> elements);

/// p_{pi1} o_A p_{pi2} == p_{pi1 * pi2}.
bool homomorphism_check(const EvaluationSet& A, const Permutation& pi1, const Permutation& pi2);

}  // namespace rsperm
