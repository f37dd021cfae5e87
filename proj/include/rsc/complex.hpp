#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "alpha.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace rsc {

// A face is its sorted vertex list; a k-face has k+1 vertices.
using Face = std::vector<int>;

// Face counts (f_0, f_1, ..., f_dim).
using FVector = std::vector<long long>;

// Finite abstract simplicial complex on vertex set {0, ..., n-1}. faces[i]
// holds the i-dimensional faces in lexicographic order. Invariants: every
// face is strictly increasing within [0, n), each level is sorted and
// duplicate-free, and every facet of a stored face is stored one level down.
struct SimplicialComplex {
    int n = 0;
    int dim_cap = 0;
    std::vector<std::vector<Face>> faces; // index = dimension, size dim_cap + 1

    bool contains(const Face& f) const {
        if (f.empty()) return false;
        int dim = static_cast<int>(f.size()) - 1;
        if (dim > dim_cap) return false;
        const auto& level = faces[static_cast<std::size_t>(dim)];
        return std::binary_search(level.begin(), level.end(), f);
    }
};

inline bool contains_face(const SimplicialComplex& X, const Face& f) { return X.contains(f); }

inline int dimension(const SimplicialComplex& X) {
    for (int i = X.dim_cap; i >= 0; --i)
        if (!X.faces[static_cast<std::size_t>(i)].empty()) return i;
    return -1;
}

inline FVector f_vector(const SimplicialComplex& X) {
    FVector f;
    int dim = dimension(X);
    for (int i = 0; i <= dim; ++i)
        f.push_back(static_cast<long long>(X.faces[static_cast<std::size_t>(i)].size()));
    return f;
}

// Throws PreconditionError on any broken invariant. The sampler guarantees
// them by construction; this is for data read from files and for tests.
inline void validate(const SimplicialComplex& X) {
    if (X.n < 0) throw PreconditionError("complex: negative vertex count");
    if (X.dim_cap < 0) throw PreconditionError("complex: negative dim_cap");
    if (X.faces.size() != static_cast<std::size_t>(X.dim_cap) + 1)
        throw PreconditionError("complex: faces must have dim_cap+1 levels");
    for (int dim = 0; dim <= X.dim_cap; ++dim) {
        const auto& level = X.faces[static_cast<std::size_t>(dim)];
        const Face* prev = nullptr;
        for (const Face& f : level) {
            if (static_cast<int>(f.size()) != dim + 1)
                throw PreconditionError("complex: face size does not match its level");
            for (std::size_t j = 0; j < f.size(); ++j) {
                if (f[j] < 0 || f[j] >= X.n)
                    throw PreconditionError("complex: vertex id out of range");
                if (j > 0 && f[j] <= f[j - 1])
                    throw PreconditionError("complex: face vertices must be strictly increasing");
            }
            if (prev && !(*prev < f))
                throw PreconditionError("complex: level not sorted or has duplicates");
            prev = &f;
            if (dim > 0) {
                Face facet(f.begin() + 1, f.end());
                for (std::size_t drop = 0;; ++drop) {
                    if (!X.contains(facet))
                        throw PreconditionError("complex: downward closure violated");
                    if (drop + 1 >= f.size()) break;
                    facet[drop] = f[drop];
                }
            }
        }
    }
}

namespace detail {

// One coin per candidate face, keyed by (seed, dimension, vertex tuple).
// Decoupling the coins from enumeration order gives two properties at once:
// identical seeds reproduce the complex exactly, and lowering any inclusion
// probability can only remove faces (the coupling used by monotonicity tests).
inline double face_coin(std::uint64_t seed, int dim, const Face& f) {
    std::uint64_t h = mix64(seed);
    h = hash_combine(h, static_cast<std::uint64_t>(dim) + 1);
    for (int v : f) h = hash_combine(h, static_cast<std::uint64_t>(v) + 1);
    return unit_from_bits(h);
}

} // namespace detail

// Multiparameter random complex on n vertices: all vertices are present, and
// each candidate i-face whose full boundary made it in is kept independently
// with probability n^{-alpha_i}. Candidates are enumerated level by level, so
// downward closure holds by construction. alpha entries beyond the stored
// ones are +infinity, i.e. those levels are empty.
inline SimplicialComplex sample_complex(int n, const AlphaVector& alpha, int dim_cap,
                                        std::uint64_t seed) {
    if (n < 0) throw PreconditionError("sample_complex: n must be >= 0");
    if (dim_cap < 0) throw PreconditionError("sample_complex: dim_cap must be >= 0");

    SimplicialComplex X;
    X.n = n;
    X.dim_cap = dim_cap;
    X.faces.assign(static_cast<std::size_t>(dim_cap) + 1, {});
    for (int v = 0; v < n; ++v) X.faces[0].push_back({v});

    double nd = static_cast<double>(n);
    for (int dim = 1; dim <= dim_cap; ++dim) {
        double a = alpha.get(dim);
        if (std::isinf(a)) break; // this and every higher level is empty
        double p = std::pow(nd, -a);
        auto& level = X.faces[static_cast<std::size_t>(dim)];
        const auto& below = X.faces[static_cast<std::size_t>(dim) - 1];

        if (dim == 1) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (detail::face_coin(seed, 1, {u, v}) < p) level.push_back({u, v});
            continue;
        }

        // Extend each (dim-1)-face f by a vertex beyond its maximum; f itself
        // is one facet of the candidate, the others are checked by search.
        // Every candidate arises exactly once this way.
        Face cand(static_cast<std::size_t>(dim) + 1);
        Face facet(static_cast<std::size_t>(dim));
        for (const Face& f : below) {
            std::copy(f.begin(), f.end(), cand.begin());
            for (int v = f.back() + 1; v < n; ++v) {
                cand[static_cast<std::size_t>(dim)] = v;
                bool closed = true;
                // facet = cand minus position drop; drop = dim recreates f.
                std::copy(cand.begin() + 1, cand.end(), facet.begin());
                for (int drop = 0; drop < dim && closed; ++drop) {
                    if (!std::binary_search(below.begin(), below.end(), facet)) closed = false;
                    facet[static_cast<std::size_t>(drop)] = cand[static_cast<std::size_t>(drop)];
                }
                if (closed && detail::face_coin(seed, dim, cand) < p) level.push_back(cand);
            }
        }
        std::sort(level.begin(), level.end());
        if (level.empty()) break;
    }
    return X;
}

// Closure of the d-faces: the subcomplex of everything contained in a d-face.
// Vertex set stays {0, ..., n-1} but only vertices inside d-faces appear.
inline SimplicialComplex pure_part(const SimplicialComplex& X, int d) {
    if (d < 0 || d > X.dim_cap) throw PreconditionError("pure_part: d out of range");
    SimplicialComplex P;
    P.n = X.n;
    P.dim_cap = d;
    P.faces.assign(static_cast<std::size_t>(d) + 1, {});
    std::vector<std::set<Face>> levels(static_cast<std::size_t>(d) + 1);
    std::vector<int> pick;
    for (const Face& f : X.faces[static_cast<std::size_t>(d)]) {
        for (std::uint32_t mask = 1; mask < (1u << (d + 1)); ++mask) {
            pick.clear();
            for (int j = 0; j <= d; ++j)
                if (mask & (1u << j)) pick.push_back(f[static_cast<std::size_t>(j)]);
            levels[pick.size() - 1].insert(pick);
        }
    }
    for (int i = 0; i <= d; ++i)
        P.faces[static_cast<std::size_t>(i)].assign(levels[static_cast<std::size_t>(i)].begin(),
                                                    levels[static_cast<std::size_t>(i)].end());
    return P;
}

// All faces of dimension <= k.
inline SimplicialComplex skeleton(const SimplicialComplex& X, int k) {
    if (k < 0) throw PreconditionError("skeleton: k must be >= 0");
    SimplicialComplex S;
    S.n = X.n;
    S.dim_cap = k;
    S.faces.assign(static_cast<std::size_t>(k) + 1, {});
    for (int i = 0; i <= std::min(k, X.dim_cap); ++i)
        S.faces[static_cast<std::size_t>(i)] = X.faces[static_cast<std::size_t>(i)];
    return S;
}

inline nlohmann::json complex_to_json(const SimplicialComplex& X) {
    nlohmann::json j;
    j["n"] = X.n;
    j["dim_cap"] = X.dim_cap;
    // 0-faces are always all of {0..n-1}, so only dimensions >= 1 are stored.
    nlohmann::json levels = nlohmann::json::array();
    for (int i = 1; i <= X.dim_cap; ++i) levels.push_back(X.faces[static_cast<std::size_t>(i)]);
    j["faces"] = levels;
    return j;
}

inline SimplicialComplex complex_from_json(const nlohmann::json& j) {
    SimplicialComplex X;
    try {
        X.n = j.at("n").get<int>();
        X.dim_cap = j.at("dim_cap").get<int>();
        const auto& levels = j.at("faces");
        if (!levels.is_array()) throw PreconditionError("complex json: 'faces' must be an array");
        if (static_cast<int>(levels.size()) != X.dim_cap && !(X.dim_cap == 0 && levels.empty()))
            throw PreconditionError("complex json: 'faces' must list dimensions 1..dim_cap");
        X.faces.assign(static_cast<std::size_t>(X.dim_cap) + 1, {});
        for (int v = 0; v < X.n; ++v) X.faces[0].push_back({v});
        for (std::size_t i = 0; i < levels.size(); ++i)
            X.faces[i + 1] = levels[i].get<std::vector<Face>>();
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("complex json: ") + e.what());
    }
    validate(X);
    return X;
}

} // namespace rsc
