#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "alpha.hpp"
#include "complex.hpp"
#include "errors.hpp"

namespace rsc {

// The d-faces of a complex viewed as a (d+1)-uniform hypergraph.
struct DFaceHypergraph {
    int d = 1;
    std::vector<int> vertices;  // sorted; exactly the vertices covered by some edge
    std::vector<Face> edges;    // sorted lexicographically
};

inline DFaceHypergraph build_hypergraph(const SimplicialComplex& X, int d) {
    if (d < 1) throw PreconditionError("build_hypergraph: d must be >= 1");
    DFaceHypergraph H;
    H.d = d;
    if (d <= X.dim_cap) H.edges = X.faces[static_cast<std::size_t>(d)];
    std::set<int> vs;
    for (const Face& e : H.edges) vs.insert(e.begin(), e.end());
    H.vertices.assign(vs.begin(), vs.end());
    return H;
}

// Trace of the peeling process. Each order entry is one removal step: a
// vertex of degree <= 1 together with the edge it freed (absent when the
// vertex was already isolated). core is what survives.
struct PeelResult {
    std::vector<std::pair<int, std::optional<Face>>> order;
    std::vector<Face> core;

    bool operator==(const PeelResult&) const = default;
};

// Repeatedly remove a vertex lying in at most one surviving edge, deleting
// that edge with it; always pick the smallest eligible vertex id, which makes
// the trace a pure function of the input. The surviving edges form the
// 2-core: the maximal sub-hypergraph where every covered vertex has degree
// >= 2. The core itself does not depend on removal order.
inline PeelResult two_core(const DFaceHypergraph& H) {
    PeelResult r;
    std::map<int, std::vector<std::size_t>> incident;
    for (std::size_t e = 0; e < H.edges.size(); ++e)
        for (int v : H.edges[e]) incident[v].push_back(e);

    std::map<int, int> degree;
    for (int v : H.vertices) degree[v] = static_cast<int>(incident[v].size());

    std::vector<bool> edge_alive(H.edges.size(), true);
    std::set<int> eligible;
    for (auto& [v, deg] : degree)
        if (deg <= 1) eligible.insert(v);

    std::set<int> removed;
    while (!eligible.empty()) {
        int v = *eligible.begin();
        eligible.erase(eligible.begin());
        if (removed.count(v)) continue;
        removed.insert(v);

        std::optional<Face> freed;
        for (std::size_t e : incident[v]) {
            if (!edge_alive[e]) continue;
            freed = H.edges[e];
            edge_alive[e] = false;
            for (int w : H.edges[e]) {
                if (w == v || removed.count(w)) continue;
                if (--degree[w] <= 1) eligible.insert(w);
            }
            break; // degree was <= 1, so this was the only live edge
        }
        r.order.emplace_back(v, std::move(freed));
    }

    for (std::size_t e = 0; e < H.edges.size(); ++e)
        if (edge_alive[e]) r.core.push_back(H.edges[e]);
    return r;
}

// Connected components of the d-faces under shared-vertex adjacency. Each
// component is its sorted face list; components are ordered by first face.
inline std::vector<std::vector<Face>> weakly_connected_components(const SimplicialComplex& X, int d) {
    DFaceHypergraph H = build_hypergraph(X, d);
    std::vector<std::size_t> parent(H.edges.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::map<int, std::size_t> first_edge_of;
    for (std::size_t e = 0; e < H.edges.size(); ++e)
        for (int v : H.edges[e]) {
            auto [it, inserted] = first_edge_of.try_emplace(v, e);
            if (!inserted) parent[find(e)] = find(it->second);
        }

    std::map<std::size_t, std::vector<Face>> groups;
    for (std::size_t e = 0; e < H.edges.size(); ++e) groups[find(e)].push_back(H.edges[e]);
    std::vector<std::vector<Face>> comps;
    for (auto& [root, faces] : groups) {
        std::sort(faces.begin(), faces.end());
        comps.push_back(std::move(faces));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

// Weighted face count f_0 - sum_{i=1..d} alpha_i f_i. Subcomplexes where
// this is negative are the overloaded patterns that first-moment arguments
// rule out; an alpha_i of +infinity only matters when level i is nonempty.
inline double f_dot(const SimplicialComplex& X, const AlphaVector& alpha, int d) {
    if (d < 0) throw PreconditionError("f_dot: d must be >= 0");
    FVector f = f_vector(X);
    double r = f.empty() ? 0.0 : static_cast<double>(f[0]);
    for (int i = 1; i <= d && i < static_cast<int>(f.size()); ++i) {
        if (f[static_cast<std::size_t>(i)] == 0) continue;
        double a = alpha.get(i);
        if (std::isinf(a)) return -std::numeric_limits<double>::infinity();
        r -= a * static_cast<double>(f[static_cast<std::size_t>(i)]);
    }
    return r;
}

inline nlohmann::json peel_to_json(const PeelResult& r) {
    nlohmann::json order = nlohmann::json::array();
    for (const auto& [v, freed] : r.order) {
        nlohmann::json step = nlohmann::json::array();
        step.push_back(v);
        if (freed) step.push_back(*freed);
        else step.push_back(nullptr);
        order.push_back(std::move(step));
    }
    return nlohmann::json{{"core", r.core}, {"order", order}};
}

inline PeelResult peel_from_json(const nlohmann::json& j) {
    PeelResult r;
    try {
        for (const auto& step : j.at("order")) {
            if (!step.is_array() || step.size() != 2)
                throw PreconditionError("peel json: order steps must be [vertex, face-or-null]");
            std::optional<Face> freed;
            if (!step[1].is_null()) freed = step[1].get<Face>();
            r.order.emplace_back(step[0].get<int>(), std::move(freed));
        }
        r.core = j.at("core").get<std::vector<Face>>();
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("peel json: ") + e.what());
    }
    return r;
}

} // namespace rsc
