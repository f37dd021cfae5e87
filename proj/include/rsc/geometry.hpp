#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <json.hpp>

#include "binom.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace rsc {

using Rational = boost::multiprecision::mpq_rational;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// Labelled points in R^m, exact rational coordinates.
struct PointConfiguration {
    int m = 0;
    std::vector<VecQ> points;

    int size() const { return static_cast<int>(points.size()); }
};

inline int sign_of(const Rational& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

namespace detail {

// Points as columns, with a row of ones appended: affine questions about the
// points become linear questions about this matrix.
inline MatQ lifted_matrix(const PointConfiguration& c, const std::vector<int>& ids) {
    MatQ M(c.m + 1, static_cast<Eigen::Index>(ids.size()));
    for (std::size_t j = 0; j < ids.size(); ++j) {
        int id = ids[j];
        if (id < 0 || id >= c.size())
            throw PreconditionError("point id out of range");
        for (int i = 0; i < c.m; ++i) M(i, static_cast<Eigen::Index>(j)) = c.points[static_cast<std::size_t>(id)](i);
        M(c.m, static_cast<Eigen::Index>(j)) = 1;
    }
    return M;
}

inline void require_sorted_ids(const std::vector<int>& ids, const char* who) {
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (ids[i] <= ids[i - 1])
            throw PreconditionError(std::string(who) + ": ids must be strictly increasing");
}

inline std::string ids_to_string(const std::vector<int>& ids) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) os << ',';
        os << ids[i];
    }
    os << '}';
    return os.str();
}

} // namespace detail

// Sign of the determinant of the lifted matrix of m+1 points in R^m: +1/-1
// for the two orientations, 0 for an affinely dependent tuple.
inline int orientation(const std::vector<VecQ>& pts) {
    if (pts.empty()) throw PreconditionError("orientation: no points");
    int m = static_cast<int>(pts[0].size());
    if (static_cast<int>(pts.size()) != m + 1)
        throw PreconditionError("orientation: need exactly m+1 points in R^m");
    MatQ M(m + 1, m + 1);
    for (int j = 0; j <= m; ++j) {
        if (static_cast<int>(pts[static_cast<std::size_t>(j)].size()) != m)
            throw PreconditionError("orientation: mixed dimensions");
        for (int i = 0; i < m; ++i) M(i, j) = pts[static_cast<std::size_t>(j)](i);
        M(m, j) = 1;
    }
    return sign_of(M.determinant());
}

inline int orientation(const PointConfiguration& c, const std::vector<int>& ids) {
    std::vector<VecQ> pts;
    for (int id : ids) {
        if (id < 0 || id >= c.size()) throw PreconditionError("orientation: id out of range");
        pts.push_back(c.points[static_cast<std::size_t>(id)]);
    }
    return orientation(pts);
}

// True when the ids pick affinely independent points (needs |ids| <= m+1).
inline bool affinely_independent(const PointConfiguration& c, const std::vector<int>& ids) {
    if (static_cast<int>(ids.size()) > c.m + 1)
        throw PreconditionError("affinely_independent: more than m+1 points");
    if (ids.size() <= 1) return true;
    MatQ M = detail::lifted_matrix(c, ids);
    Eigen::FullPivLU<MatQ> lu(M);
    return lu.rank() == static_cast<Eigen::Index>(ids.size());
}

// Orientations of all (m+1)-subsets in lexicographic order. Two
// configurations with equal order types are combinatorially interchangeable:
// every hull-membership and crossing question has the same answer.
struct OrderType {
    int n = 0;
    int m = 0;
    std::vector<std::int8_t> signs;

    bool operator==(const OrderType&) const = default;
};

inline OrderType order_type(const PointConfiguration& c) {
    int n = c.size();
    int m = c.m;
    if (n < m + 1) throw PreconditionError("order_type: need at least m+1 points");
    OrderType t;
    t.n = n;
    t.m = m;
    std::vector<int> ids(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) ids[static_cast<std::size_t>(i)] = i;
    while (true) {
        int s = orientation(c, ids);
        if (s == 0)
            throw DegeneracyError("order_type: affinely dependent subset " + detail::ids_to_string(ids));
        t.signs.push_back(static_cast<std::int8_t>(s));
        // next (m+1)-combination of {0..n-1}
        int k = m;
        while (k >= 0 && ids[static_cast<std::size_t>(k)] == n - (m + 1) + k) --k;
        if (k < 0) break;
        ++ids[static_cast<std::size_t>(k)];
        for (int i = k + 1; i <= m; ++i) ids[static_cast<std::size_t>(i)] = ids[static_cast<std::size_t>(i) - 1] + 1;
    }
    return t;
}

// The unique Radon partition of m+2 points in general position in R^m: the
// two blocks of the sign partition of the (one-dimensional) affine
// dependence, with the dependence coefficients as witnesses. part_a holds
// the smallest id; lambda entries are positive, integral, coprime, and
// aligned with their part. The witness identity is
//   sum lambda_a p_a / sum lambda_a = sum lambda_b p_b / sum lambda_b,
// a point common to both hulls.
struct RadonPartition {
    std::vector<int> part_a;
    std::vector<int> part_b;
    std::vector<Rational> lambda_a;
    std::vector<Rational> lambda_b;

    // Unordered comparison against a candidate split.
    bool splits_as(const std::vector<int>& s, const std::vector<int>& t) const {
        return (part_a == s && part_b == t) || (part_a == t && part_b == s);
    }
};

inline RadonPartition radon_partition(const PointConfiguration& c, const std::vector<int>& ids) {
    if (static_cast<int>(ids.size()) != c.m + 2)
        throw PreconditionError("radon_partition: need exactly m+2 ids");
    detail::require_sorted_ids(ids, "radon_partition");

    MatQ M = detail::lifted_matrix(c, ids);
    Eigen::FullPivLU<MatQ> lu(M);
    if (lu.dimensionOfKernel() != 1)
        throw DegeneracyError("radon_partition: points " + detail::ids_to_string(ids) +
                              " do not affinely span R^m");
    MatQ K = lu.kernel(); // (m+2) x 1

    // Scale to a primitive integer vector with positive leading entry.
    using Int = boost::multiprecision::mpz_int;
    Int lcm_den = 1;
    for (int i = 0; i < K.rows(); ++i)
        lcm_den = boost::multiprecision::lcm(lcm_den, Int(denominator(K(i, 0))));
    std::vector<Int> w(static_cast<std::size_t>(K.rows()));
    Int gcd_all = 0;
    for (int i = 0; i < K.rows(); ++i) {
        Rational scaled = K(i, 0) * Rational(lcm_den);
        w[static_cast<std::size_t>(i)] = numerator(scaled);
        gcd_all = boost::multiprecision::gcd(gcd_all, w[static_cast<std::size_t>(i)]);
    }
    for (auto& x : w) x /= gcd_all;
    if (w[0] < 0)
        for (auto& x : w) x = -x;

    RadonPartition r;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0)
            throw DegeneracyError("radon_partition: a proper subset of " + detail::ids_to_string(ids) +
                                  " is affinely dependent");
        if (w[i] > 0) {
            r.part_a.push_back(ids[i]);
            r.lambda_a.emplace_back(w[i]);
        } else {
            r.part_b.push_back(ids[i]);
            r.lambda_b.emplace_back(-w[i]);
        }
    }
    return r;
}

// The common point witnessed by a Radon partition, computed from one side.
inline VecQ radon_witness_point(const PointConfiguration& c, const std::vector<int>& part,
                                const std::vector<Rational>& lambda) {
    if (part.empty() || part.size() != lambda.size())
        throw PreconditionError("radon_witness_point: malformed part");
    VecQ p = VecQ::Zero(c.m);
    Rational total = 0;
    for (std::size_t i = 0; i < part.size(); ++i) {
        p += lambda[i] * c.points[static_cast<std::size_t>(part[i])];
        total += lambda[i];
    }
    return p / total;
}

// Do the closed simplices spanned by two disjoint vertex sets intersect?
// For two (d+1)-sets in R^{2d} in general position this is exactly the
// question of whether {a, b} is the Radon partition of the union.
inline bool simplices_intersect(const std::vector<int>& a, const std::vector<int>& b,
                                const PointConfiguration& c) {
    if (a.empty() || b.empty()) throw PreconditionError("simplices_intersect: empty simplex");
    if (static_cast<int>(a.size() + b.size()) != c.m + 2)
        throw PreconditionError("simplices_intersect: vertex sets must total m+2 points");
    detail::require_sorted_ids(a, "simplices_intersect");
    detail::require_sorted_ids(b, "simplices_intersect");
    std::vector<int> u;
    u.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i] == u[i - 1]) throw PreconditionError("simplices_intersect: vertex sets overlap");
    return radon_partition(c, u).splits_as(a, b);
}

// n independent uniform integer points in [0, bound)^m. The bound must give
// the points room to be generic; the default used by callers is 2^31.
inline PointConfiguration random_configuration(int n, int m, long long coord_bound,
                                               std::uint64_t seed) {
    if (n < 0 || m < 1) throw PreconditionError("random_configuration: need n >= 0, m >= 1");
    if (coord_bound < static_cast<long long>(n) * m)
        throw PreconditionError("random_configuration: coord_bound too small to be generic");
    PointConfiguration c;
    c.m = m;
    Rng rng(hash_combine(mix64(seed), 0x706f696e74ull)); // stream tag
    for (int i = 0; i < n; ++i) {
        VecQ p(m);
        for (int j = 0; j < m; ++j)
            p(j) = Rational(static_cast<long long>(rng.below(static_cast<std::uint64_t>(coord_bound))));
        c.points.push_back(std::move(p));
    }
    return c;
}

namespace detail {

inline std::string rational_to_string(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline Rational rational_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) {
        try {
            return Rational(v.get<std::string>());
        } catch (const std::exception&) {
            throw PreconditionError("point json: cannot parse rational '" + v.get<std::string>() + "'");
        }
    }
    throw PreconditionError("point json: coordinates must be integers or 'num/den' strings");
}

} // namespace detail

inline nlohmann::json config_to_json(const PointConfiguration& c) {
    nlohmann::json pts = nlohmann::json::array();
    for (const VecQ& p : c.points) {
        nlohmann::json row = nlohmann::json::array();
        for (int i = 0; i < c.m; ++i) row.push_back(detail::rational_to_string(p(i)));
        pts.push_back(std::move(row));
    }
    return nlohmann::json{{"m", c.m}, {"points", pts}};
}

inline PointConfiguration config_from_json(const nlohmann::json& j) {
    PointConfiguration c;
    try {
        c.m = j.at("m").get<int>();
        if (c.m < 1) throw PreconditionError("point json: m must be >= 1");
        for (const auto& row : j.at("points")) {
            if (!row.is_array() || static_cast<int>(row.size()) != c.m)
                throw PreconditionError("point json: each point needs exactly m coordinates");
            VecQ p(c.m);
            for (int i = 0; i < c.m; ++i) p(i) = detail::rational_from_json(row[static_cast<std::size_t>(i)]);
            c.points.push_back(std::move(p));
        }
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("point json: ") + e.what());
    }
    return c;
}

} // namespace rsc
