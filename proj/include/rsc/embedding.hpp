#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "peel.hpp"
#include "rng.hpp"

namespace rsc {

inline constexpr int kBuilderRetries = 32;
inline constexpr long long kDefaultCoordBound = 1ll << 31;

namespace detail {

inline bool vec_equal(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}

inline bool faces_share_vertex(const Face& a, const Face& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return false;
}

inline Face face_union(const Face& a, const Face& b) {
    Face u;
    u.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

// The two ways a pair of d-faces can sit compatibly in R^2d: a shared face
// certified by affine independence of the union, or disjoint hulls certified
// by the Radon partition separating differently than the pair itself.
// Degenerate positions are failures, never errors.
inline bool faces_pair_ok(const PointConfiguration& c, const Face& f, const Face& g) {
    if (faces_share_vertex(f, g)) return affinely_independent(c, face_union(f, g));
    try {
        return !simplices_intersect(f, g, c);
    } catch (const DegeneracyError&) {
        return false;
    }
}

} // namespace detail

// Exact check that the placed points embed X linearly as far as its d-faces
// are concerned: all vertices of X at distinct points, every d-face a
// nondegenerate simplex, every vertex-sharing pair of d-faces with affinely
// independent union (so they meet exactly in the shared face), and every
// vertex-disjoint pair with non-intersecting hulls. Never throws for bad
// geometry; false is the verdict. Unplaced vertices are a caller error.
inline bool verify_embedding(const SimplicialComplex& X, const PointConfiguration& c, int d) {
    if (d < 1) throw PreconditionError("verify_embedding: d must be >= 1");
    if (c.m != 2 * d) throw PreconditionError("verify_embedding: configuration must live in R^2d");

    std::set<int> vs;
    for (const auto& level : X.faces)
        for (const Face& f : level) vs.insert(f.begin(), f.end());
    for (int v : vs)
        if (v < 0 || v >= c.size())
            throw PreconditionError("verify_embedding: vertex " + std::to_string(v) + " has no point");

    std::vector<int> verts(vs.begin(), vs.end());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (detail::vec_equal(c.points[static_cast<std::size_t>(verts[i])],
                                  c.points[static_cast<std::size_t>(verts[j])]))
                return false;

    if (d > X.dim_cap) return true;
    const auto& dfaces = X.faces[static_cast<std::size_t>(d)];
    for (const Face& f : dfaces)
        if (!affinely_independent(c, f)) return false;
    for (std::size_t i = 0; i < dfaces.size(); ++i)
        for (std::size_t j = i + 1; j < dfaces.size(); ++j)
            if (!detail::faces_pair_ok(c, dfaces[i], dfaces[j])) return false;
    return true;
}

namespace detail {

inline VecQ barycenter(const PointConfiguration& c, const std::vector<int>& ids) {
    VecQ b = VecQ::Zero(c.m);
    for (int id : ids) b += c.points[static_cast<std::size_t>(id)];
    return b / Rational(static_cast<long long>(ids.size()));
}

inline Rational linf_distance(const VecQ& a, const VecQ& b) {
    Rational best = 0;
    for (int i = 0; i < a.size(); ++i) {
        Rational diff = a(i) - b(i);
        if (diff < 0) diff = -diff;
        if (diff > best) best = diff;
    }
    return best;
}

inline Rational linf_norm(const VecQ& a) {
    Rational best = 0;
    for (int i = 0; i < a.size(); ++i) {
        Rational v = a(i) < 0 ? Rational(-a(i)) : a(i);
        if (v > best) best = v;
    }
    return best;
}

} // namespace detail

// Straight-line embedding of a pure d-part with empty 2-core, built by
// replaying the peel backwards. Each reinserted face has a vertex no earlier
// face uses; all its other new vertices get fresh random integer points, and
// that free vertex (largest new id, by convention) goes at
//   barycenter(sigma) + delta * u,
// sigma being the face minus the free vertex and u a direction inside a
// random affine d-flat through sigma. delta starts at half the minimum
// distance from the barycenter to other placed points, and is halved with u
// resampled until the face passes the same pairwise checks the verifier
// applies, up to kBuilderRetries times. On exhaustion all randomness for the
// face is redrawn once; a second exhaustion is a ConstructiveFailureError.
// Vertices outside any d-face are placed freely at the end. The result
// covers vertex ids 0..n-1 and satisfies verify_embedding.
inline PointConfiguration build_embedding(const SimplicialComplex& X, int d, const PeelResult& peel,
                                          std::uint64_t seed,
                                          long long coord_bound = kDefaultCoordBound) {
    if (d < 1) throw PreconditionError("build_embedding: d must be >= 1");
    if (!peel.core.empty()) throw ConstructiveFailureError("build_embedding: 2-core is nonempty");
    if (coord_bound < 4) throw PreconditionError("build_embedding: coord_bound too small");

    std::vector<Face> order;
    for (auto it = peel.order.rbegin(); it != peel.order.rend(); ++it)
        if (it->second) order.push_back(*it->second);
    {
        std::vector<Face> a = order;
        std::sort(a.begin(), a.end());
        std::vector<Face> b;
        if (d <= X.dim_cap) b = X.faces[static_cast<std::size_t>(d)];
        if (a != b) throw PreconditionError("build_embedding: peel trace does not match the d-faces of X");
    }

    const int m = 2 * d;
    PointConfiguration c;
    c.m = m;
    c.points.assign(static_cast<std::size_t>(X.n), VecQ::Zero(m));
    std::vector<bool> placed(static_cast<std::size_t>(X.n), false);

    Rng pt_rng(hash_combine(mix64(seed), 0x66726573684070ull));
    Rng dir_rng(hash_combine(mix64(seed), 0x646972406670ull));

    auto fresh_point = [&]() {
        VecQ p(m);
        for (int i = 0; i < m; ++i)
            p(i) = Rational(static_cast<long long>(pt_rng.below(static_cast<std::uint64_t>(coord_bound))));
        return p;
    };
    auto point_in_use = [&](const VecQ& p) {
        for (std::size_t v = 0; v < placed.size(); ++v)
            if (placed[v] && detail::vec_equal(c.points[v], p)) return true;
        return false;
    };
    auto place_fresh_distinct = [&](int v) {
        for (int attempt = 0; attempt < 2; ++attempt) {
            VecQ p = fresh_point();
            if (!point_in_use(p)) {
                c.points[static_cast<std::size_t>(v)] = p;
                placed[static_cast<std::size_t>(v)] = true;
                return;
            }
        }
        throw ConstructiveFailureError("build_embedding: could not draw a distinct fresh point");
    };
    auto random_direction = [&]() {
        // integer vector in [-2^20, 2^20]^m, nonzero
        while (true) {
            VecQ u(m);
            bool nonzero = false;
            for (int i = 0; i < m; ++i) {
                long long x = dir_rng.between(-(1ll << 20), 1ll << 20);
                if (x != 0) nonzero = true;
                u(i) = Rational(x);
            }
            if (nonzero) return u;
        }
    };

    std::vector<Face> done;
    for (const Face& f : order) {
        Face fresh;
        for (int v : f)
            if (!placed[static_cast<std::size_t>(v)]) fresh.push_back(v);
        if (fresh.empty())
            throw PreconditionError("build_embedding: peel order lacks a fresh vertex for a face");
        int free_vertex = fresh.back();
        Face sigma;
        for (int v : f)
            if (v != free_vertex) sigma.push_back(v);

        auto pair_checks_pass = [&]() {
            if (!affinely_independent(c, f)) return false;
            for (const Face& g : done)
                if (!detail::faces_pair_ok(c, f, g)) return false;
            return true;
        };

        bool face_done = false;
        for (int round = 0; round < 2 && !face_done; ++round) {
            for (int v : fresh)
                if (v != free_vertex) place_fresh_distinct(v);

            VecQ bary = detail::barycenter(c, sigma);
            Rational delta0 = Rational(coord_bound, 4);
            bool bary_clear = true;
            {
                bool any = false;
                Rational best = 0;
                for (std::size_t v = 0; v < placed.size(); ++v) {
                    if (!placed[v]) continue;
                    if (std::find(sigma.begin(), sigma.end(), static_cast<int>(v)) != sigma.end()) continue;
                    Rational dist = detail::linf_distance(bary, c.points[v]);
                    if (!any || dist < best) best = dist;
                    any = true;
                }
                if (any) {
                    if (best == 0) bary_clear = false; // a placed point sits on the barycenter
                    else delta0 = best / 2;
                }
            }

            // Direction space of the flat: edge directions of sigma plus one
            // random vector. For d = 1 sigma is a single vertex and the flat
            // is a random line through it.
            VecQ w = random_direction();

            if (bary_clear) {
                Rational delta = delta0;
                for (int r = 0; r < kBuilderRetries && !face_done; ++r, delta /= 2) {
                    VecQ u = VecQ::Zero(m);
                    for (std::size_t i = 1; i < sigma.size(); ++i) {
                        long long ci = dir_rng.between(-(1ll << 20), 1ll << 20);
                        u += Rational(ci) * (c.points[static_cast<std::size_t>(sigma[i])] -
                                             c.points[static_cast<std::size_t>(sigma[0])]);
                    }
                    long long cw = dir_rng.between(-(1ll << 20), 1ll << 20);
                    u += Rational(cw) * w;
                    Rational norm = detail::linf_norm(u);
                    if (norm == 0) continue;
                    VecQ candidate = bary + (delta / norm) * u;
                    if (point_in_use(candidate)) continue;
                    c.points[static_cast<std::size_t>(free_vertex)] = candidate;
                    placed[static_cast<std::size_t>(free_vertex)] = true;
                    if (pair_checks_pass()) face_done = true;
                    else placed[static_cast<std::size_t>(free_vertex)] = false;
                }
            }

            if (!face_done)
                for (int v : fresh)
                    if (v != free_vertex) placed[static_cast<std::size_t>(v)] = false;
        }
        if (!face_done)
            throw ConstructiveFailureError("build_embedding: retry budget exhausted on face " +
                                           detail::ids_to_string(f));
        done.push_back(f);
    }

    for (int v = 0; v < X.n; ++v)
        if (!placed[static_cast<std::size_t>(v)]) place_fresh_distinct(v);

    if (!verify_embedding(X, c, d))
        throw ConstructiveFailureError("build_embedding: result failed verification");
    return c;
}

} // namespace rsc
