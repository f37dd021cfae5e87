#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "binom.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "rng.hpp"

namespace rsc {

// Hard ceiling on exhaustive subset enumeration.
inline constexpr std::uint64_t kSubsetGuard = 100'000'000ull;

// Outcome of a match count, a sampled estimate, or a census run.
struct MatchReport {
    std::uint64_t checked = 0;
    std::uint64_t matches = 0;
    std::string mode = "exhaustive"; // or "sampled"
    // census only: balanced_checked == checked, balanced_hits = subsets whose
    // Radon parts have the two middle sizes
    std::uint64_t balanced_checked = 0;
    std::uint64_t balanced_hits = 0;
    bool census = false;
};

inline nlohmann::json match_report_to_json(const MatchReport& r) {
    nlohmann::json j{{"checked", r.checked}, {"matches", r.matches}, {"mode", r.mode}};
    if (r.census) {
        j["balanced_checked"] = r.balanced_checked;
        j["balanced_hits"] = r.balanced_hits;
    }
    return j;
}

namespace detail {

// Lexicographically next k-subset of {0..n-1}; false when exhausted.
inline bool next_subset(std::vector<int>& ids, int n) {
    int k = static_cast<int>(ids.size());
    int i = k - 1;
    while (i >= 0 && ids[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++ids[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
        ids[static_cast<std::size_t>(j)] = ids[static_cast<std::size_t>(j) - 1] + 1;
    return true;
}

// Cheap necessary condition for a subset to be a Radon match: some split of
// it into two faces of X. The actual match splits along the Radon partition,
// which is one of the splits scanned here, so a subset rejected here can
// never be a match and the exact solve can be skipped. Pays off because
// membership lookups are orders of magnitude cheaper than a rational kernel.
inline bool some_split_in_complex(const SimplicialComplex& X, const std::vector<int>& ids, int dim_x) {
    int k = static_cast<int>(ids.size());
    if (dim_x < 0) return false;
    Face t, rest;
    for (std::uint32_t mask = 0; mask + 1 < (1u << (k - 1)); ++mask) {
        // split by membership of positions 1..k-1; position 0 always in t
        int size_t_side = 1 + __builtin_popcount(mask);
        if (size_t_side > dim_x + 1 || k - size_t_side > dim_x + 1) continue;
        t.clear();
        rest.clear();
        t.push_back(ids[0]);
        for (int j = 1; j < k; ++j) {
            if (mask & (1u << (j - 1))) t.push_back(ids[static_cast<std::size_t>(j)]);
            else rest.push_back(ids[static_cast<std::size_t>(j)]);
        }
        if (X.contains(t) && X.contains(rest)) return true;
    }
    return false;
}

// Radon-match test for one (2d+2)-subset. Because complexes are downward
// closed, both parts being faces of X already means the full simplices on
// the parts are present.
inline bool subset_is_match(const SimplicialComplex& X, const PointConfiguration& c,
                            const std::vector<int>& ids, int dim_x) {
    if (!some_split_in_complex(X, ids, dim_x)) return false;
    RadonPartition rp = radon_partition(c, ids);
    return X.contains(rp.part_a) && X.contains(rp.part_b);
}

inline std::uint64_t guarded_total(int n, int k, std::uint64_t budget, const char* who) {
    std::uint64_t total = binom_saturating(n, k);
    if (total > budget)
        throw BudgetError(std::string(who) + ": C(" + std::to_string(n) + "," + std::to_string(k) +
                          ") exceeds the subset budget of " + std::to_string(budget) +
                          "; use sampled mode");
    return total;
}

} // namespace detail

// Exhaustive scan of all (2d+2)-subsets of the placed vertices, counting
// those whose Radon partition has both parts present as faces of X.
inline MatchReport count_radon_matches(const SimplicialComplex& X, const PointConfiguration& c,
                                       int d, std::uint64_t budget = kSubsetGuard) {
    if (d < 1) throw PreconditionError("count_radon_matches: d must be >= 1");
    if (c.m != 2 * d) throw PreconditionError("count_radon_matches: configuration must live in R^2d");
    if (c.size() != X.n) throw PreconditionError("count_radon_matches: need one point per vertex");
    int k = 2 * d + 2;
    MatchReport r;
    if (X.n < k) return r;
    r.checked = detail::guarded_total(X.n, k, budget, "count_radon_matches");
    int dim_x = dimension(X);
    std::vector<int> ids(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) ids[static_cast<std::size_t>(i)] = i;
    do {
        if (detail::subset_is_match(X, c, ids, dim_x)) ++r.matches;
    } while (detail::next_subset(ids, X.n));
    return r;
}

// Early-exit existence check over the same enumeration.
inline bool has_radon_match(const SimplicialComplex& X, const PointConfiguration& c, int d,
                            std::uint64_t budget = kSubsetGuard) {
    if (d < 1) throw PreconditionError("has_radon_match: d must be >= 1");
    if (c.m != 2 * d) throw PreconditionError("has_radon_match: configuration must live in R^2d");
    if (c.size() != X.n) throw PreconditionError("has_radon_match: need one point per vertex");
    int k = 2 * d + 2;
    if (X.n < k) return false;
    detail::guarded_total(X.n, k, budget, "has_radon_match");
    int dim_x = dimension(X);
    std::vector<int> ids(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) ids[static_cast<std::size_t>(i)] = i;
    do {
        if (detail::subset_is_match(X, c, ids, dim_x)) return true;
    } while (detail::next_subset(ids, X.n));
    return false;
}

// Uniform random (2d+2)-subsets; matches/checked estimates the match
// density, unbiased trial by trial.
inline MatchReport sample_radon_matches(const SimplicialComplex& X, const PointConfiguration& c,
                                        int d, std::uint64_t trials, std::uint64_t seed) {
    if (d < 1) throw PreconditionError("sample_radon_matches: d must be >= 1");
    if (c.m != 2 * d) throw PreconditionError("sample_radon_matches: configuration must live in R^2d");
    if (c.size() != X.n) throw PreconditionError("sample_radon_matches: need one point per vertex");
    if (trials < 1) throw PreconditionError("sample_radon_matches: trials must be >= 1");
    int k = 2 * d + 2;
    if (X.n < k) throw PreconditionError("sample_radon_matches: need at least 2d+2 vertices");

    MatchReport r;
    r.mode = "sampled";
    r.checked = trials;
    int dim_x = dimension(X);
    Rng rng(hash_combine(mix64(seed), 0x73616d706c65ull));
    std::set<int> pick;
    std::vector<int> ids;
    for (std::uint64_t t = 0; t < trials; ++t) {
        // Floyd's rejection-free uniform k-subset of {0..n-1}
        pick.clear();
        for (int j = X.n - k; j < X.n; ++j) {
            int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
            if (!pick.insert(x).second) pick.insert(j);
        }
        ids.assign(pick.begin(), pick.end());
        if (detail::subset_is_match(X, c, ids, dim_x)) ++r.matches;
    }
    return r;
}

// For every (m+2)-subset, record whether its Radon partition splits into the
// two middle sizes. For generic points with n >= m+3 at least 1/(m+3) of all
// subsets split that way; that bound is asserted here, so a violation
// (impossible for genuinely generic input) aborts rather than returning.
inline MatchReport balanced_split_census(const PointConfiguration& c,
                                         std::uint64_t budget = kSubsetGuard) {
    int k = c.m + 2;
    if (c.size() < k) throw PreconditionError("balanced_split_census: need at least m+2 points");
    MatchReport r;
    r.census = true;
    r.checked = detail::guarded_total(c.size(), k, budget, "balanced_split_census");
    r.balanced_checked = r.checked;
    std::size_t lo = static_cast<std::size_t>(k / 2);
    std::vector<int> ids(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) ids[static_cast<std::size_t>(i)] = i;
    do {
        RadonPartition rp = radon_partition(c, ids);
        std::size_t a = rp.part_a.size();
        if (a == lo || a == static_cast<std::size_t>(k) - lo) ++r.balanced_hits;
    } while (detail::next_subset(ids, c.size()));
    if (c.size() >= c.m + 3 && r.balanced_hits * static_cast<std::uint64_t>(c.m + 3) < r.balanced_checked)
        throw std::logic_error("balanced_split_census: balanced fraction fell below 1/(m+3), "
                               "which cannot happen for points in general position");
    return r;
}

} // namespace rsc
