#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "alpha.hpp"
#include "binom.hpp"
#include "errors.hpp"

namespace rsc {

using Rational = boost::multiprecision::mpq_rational;

// |exponent - 1| at or below this counts as sitting on the threshold.
inline constexpr double kCriticalTol = 1e-12;

// (C(s,2), C(s,3), ..., C(s,s)): the number of i-faces of an (s-1)-simplex
// for i = 1 .. s-1. Empty for s = 1.
inline std::vector<long long> binom_vector(int s) {
    if (s < 1) throw PreconditionError("binom_vector: s must be >= 1");
    std::vector<long long> v;
    for (int i = 1; i <= s - 1; ++i) v.push_back(binom(s, i + 1));
    return v;
}

// Growth exponent of the expected number of (s-1)-faces: the expected count
// is of order n^{face_exponent}. -infinity when some switched-off level
// contributes.
inline double face_exponent(int s, const AlphaVector& alpha) {
    if (s < 1) throw PreconditionError("face_exponent: s must be >= 1");
    double e = static_cast<double>(s);
    for (int i = 1; i <= s - 1; ++i) {
        double a = alpha.get(i);
        if (std::isinf(a)) return -std::numeric_limits<double>::infinity();
        e -= a * static_cast<double>(binom(s, i + 1));
    }
    return e;
}

enum class Regime { Sparse, Critical, Dense };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Sparse: return "Sparse";
        case Regime::Critical: return "Critical";
        default: return "Dense";
    }
}

struct ClassifyReport {
    Regime regime = Regime::Sparse;
    double exponent = 0.0; // face_exponent(d+1, alpha) - 1
};

// Which side of the embeddability threshold (d+1) - alpha . v_{d+1} = 1 the
// parameters fall on. Dense means the critical count grows (no embedding in
// R^{2d} expected); Sparse means it vanishes (embedding expected).
inline ClassifyReport classify(int d, const AlphaVector& alpha) {
    if (d < 1) throw PreconditionError("classify: d must be >= 1");
    double x = face_exponent(d + 1, alpha) - 1.0;
    ClassifyReport r;
    r.exponent = x;
    if (std::abs(x) <= kCriticalTol) r.regime = Regime::Critical;
    else if (x > 0.0) r.regime = Regime::Dense;
    else r.regime = Regime::Sparse;
    return r;
}

struct JansonReport {
    double min_exponent = 0.0;
    std::vector<int> argmin; // lexicographically smallest minimizer
};

// Minimum of sum_{i=1..4} (m_i - alpha . v_{m_i}) over m in {1..d+1}^4 with
// at least one m_i >= 2. Governs the second-moment concentration of the
// match count: every way four faces can overlap contributes one tuple.
inline JansonReport janson_exponent(int d, const AlphaVector& alpha) {
    if (d < 1) throw PreconditionError("janson_exponent: d must be >= 1");
    std::vector<double> term(static_cast<std::size_t>(d) + 2, 0.0);
    for (int m = 1; m <= d + 1; ++m) term[static_cast<std::size_t>(m)] = face_exponent(m, alpha);

    JansonReport best;
    best.min_exponent = std::numeric_limits<double>::infinity();
    std::array<int, 4> m{};
    for (m[0] = 1; m[0] <= d + 1; ++m[0])
        for (m[1] = 1; m[1] <= d + 1; ++m[1])
            for (m[2] = 1; m[2] <= d + 1; ++m[2])
                for (m[3] = 1; m[3] <= d + 1; ++m[3]) {
                    if (m[0] == 1 && m[1] == 1 && m[2] == 1 && m[3] == 1) continue;
                    double s = term[static_cast<std::size_t>(m[0])] + term[static_cast<std::size_t>(m[1])] +
                               term[static_cast<std::size_t>(m[2])] + term[static_cast<std::size_t>(m[3])];
                    if (s < best.min_exponent) {
                        best.min_exponent = s;
                        best.argmin.assign(m.begin(), m.end());
                    }
                }
    return best;
}

// Number of (k+1)-subsets of a (d+1)-set that straddle a fixed split into t
// chosen and d+1-t other vertices, i.e. hit both sides.
inline long long g_count(int t, int d, int k) {
    if (d < 1 || t < 0 || t > d + 1 || k < 0)
        throw PreconditionError("g_count: need d >= 1, 0 <= t <= d+1, k >= 0");
    return binom(d + 1, k + 1) - binom(t, k + 1) - binom(d + 1 - t, k + 1);
}

// Exponent bound for configurations where a t-subset of a (d+1)-face's
// vertices is reused: t fresh vertices, minus every face level that must be
// freshly present (the levels inside the t-subset plus the straddling ones).
inline double gamma_bound(int t, int d, const AlphaVector& alpha) {
    if (d < 1 || t < 1 || t > d) throw PreconditionError("gamma_bound: need 1 <= t <= d");
    double g = static_cast<double>(t);
    for (int k = 1; k <= d; ++k) {
        long long coeff = binom(t, k + 1) + g_count(t, d, k);
        if (coeff == 0) continue;
        double a = alpha.get(k);
        if (std::isinf(a)) return -std::numeric_limits<double>::infinity();
        g -= a * static_cast<double>(coeff);
    }
    return g;
}

namespace detail {

// Simplex vertices of the constraint region used by the f-vector bounds:
// vertex j (j = 2..s) has the single nonzero entry alpha_{j-1} = c / C(s,j).
// Checks the conclusion exactly at each vertex, then samples the interior on
// a barycentric grid of resolution res and checks in double precision.
template <typename VertexCheck, typename GridCheck>
bool scan_constraint_simplex(int s, const Rational& c, int res, VertexCheck&& at_vertex,
                             GridCheck&& on_grid) {
    for (int j = 2; j <= s; ++j) {
        Rational aj = c / binom(s, j);
        if (!at_vertex(j, aj)) return false;
    }
    // Barycentric weights k_2..k_s >= 0 summing to res, enumerated as
    // compositions; weight k_j/res multiplies vertex j.
    std::vector<int> k(static_cast<std::size_t>(s) - 1, 0);
    k[0] = res;
    std::vector<double> a(static_cast<std::size_t>(s), 0.0); // a[i] = alpha_{i+1}, alpha_s kept 0
    double cd = static_cast<double>(c);
    while (true) {
        for (int j = 2; j <= s; ++j)
            a[static_cast<std::size_t>(j) - 2] =
                (static_cast<double>(k[static_cast<std::size_t>(j) - 2]) / res) * cd /
                static_cast<double>(binom(s, j));
        if (!on_grid(AlphaVector(a))) return false;
        // next composition: move one unit from the first nonzero entry
        // leftward of the tail into its right neighbour, standard order
        int i = 0;
        while (i + 1 < static_cast<int>(k.size()) && k[static_cast<std::size_t>(i)] == 0) ++i;
        if (i + 1 >= static_cast<int>(k.size())) break;
        int v = k[static_cast<std::size_t>(i)];
        k[static_cast<std::size_t>(i)] = 0;
        k[0] = v - 1;
        k[static_cast<std::size_t>(i) + 1] += 1;
    }
    return true;
}

} // namespace detail

// Upper-threshold half of the f-vector dichotomy: on the simplex where
// (s) - alpha . v_s = 1 - eps (so (s-1)-faces are scarce), the expected
// count of s-faces decays, i.e. face_exponent(s+1, alpha) < 0. Vertices are
// verified in exact arithmetic, the interior on a resolution-res grid.
inline bool verify_fvector_lemma_decay(int s, double eps, int res) {
    if (s < 2 || eps <= 0 || res < 1)
        throw PreconditionError("verify_fvector_lemma_decay: need s >= 2, eps > 0, res >= 1");
    // alpha on the simplex satisfies alpha . v_s = s - 1 + eps.
    Rational c = Rational(s - 1) + Rational(eps);
    return detail::scan_constraint_simplex(
        s, c, res,
        [&](int j, const Rational& aj) {
            // face_exponent(s+1) at the vertex: s+1 - aj * C(s+1, j) < 0
            Rational e = Rational(s + 1) - aj * binom(s + 1, j);
            return e < 0;
        },
        [&](const AlphaVector& a) { return face_exponent(s + 1, a) < 0.0; });
}

// Lower-threshold half: on the simplex where (s) - alpha . v_s = 1 + eps
// (so (s-1)-faces are plentiful), the (s-2)-faces are dense in the sense
// face_exponent(s-1, alpha) > 1.
inline bool verify_fvector_lemma_dense_below(int s, double eps, int res) {
    if (s < 3 || eps <= 0 || eps >= s - 1 || res < 1)
        throw PreconditionError(
            "verify_fvector_lemma_dense_below: need s >= 3, 0 < eps < s-1, res >= 1");
    Rational c = Rational(s - 1) - Rational(eps);
    return detail::scan_constraint_simplex(
        s, c, res,
        [&](int j, const Rational& aj) {
            Rational e = Rational(s - 1) - aj * binom(s - 1, j);
            return e > 1;
        },
        [&](const AlphaVector& a) { return face_exponent(s - 1, a) > 1.0; });
}

// Both halves where they apply (the dense-below half needs s >= 3).
inline bool verify_fvector_lemma(int s, double eps, int res) {
    bool ok = verify_fvector_lemma_decay(s, eps, res);
    if (s >= 3) ok = ok && verify_fvector_lemma_dense_below(s, eps, res);
    return ok;
}

// t/(n-1) <= [C(n,k) - C(n-t,k)] / C(n,k): the fraction of k-subsets that
// meet a fixed t-set is at least the fraction t/(n-1). Exact arithmetic.
inline bool check_ratio_claim(int n, int t, int k) {
    if (n < 2 || t < 1 || t > n - 1 || k < 2 || k > n)
        throw PreconditionError("check_ratio_claim: need n >= 2, 1 <= t <= n-1, 2 <= k <= n");
    Rational lhs(t, n - 1);
    Rational rhs = Rational(binom(n, k) - binom(n - t, k), binom(n, k));
    return lhs <= rhs;
}

// C(d+1, i+1) <= (d/(i+1)) * (2 C(d,i) - C(m,i)) for 0 <= m <= d-1: the
// i-face count of a d-simplex is dominated by the neighbourhood bound that
// the degree argument needs. Exact arithmetic.
inline bool check_degree_claim(int d, int i, int m) {
    if (d < 1 || i < 1 || i > d || m < 0 || m > d - 1)
        throw PreconditionError("check_degree_claim: need d >= 1, 1 <= i <= d, 0 <= m <= d-1");
    Rational lhs(binom(d + 1, i + 1));
    Rational rhs = Rational(d, i + 1) * (2 * Rational(binom(d, i)) - Rational(binom(m, i)));
    return lhs <= rhs;
}

} // namespace rsc
