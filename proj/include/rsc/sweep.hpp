#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "alpha.hpp"
#include "binom.hpp"
#include "complex.hpp"
#include "embedding.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "peel.hpp"
#include "radon.hpp"
#include "rng.hpp"

namespace rsc {

struct MeasurementSet {
    bool core = true; // peeling always runs; this flag only names the default
    bool embed = false;
    bool match = false;
    bool components = false;
};

struct SweepSpec {
    int d = 1;
    int n = 0;
    AlphaVector alpha;          // template; entry `vary` is replaced by grid values
    int vary = 1;               // 1-based coordinate index
    double grid_start = 0.0;
    double grid_stop = 0.0;
    int grid_steps = 1;
    int trials = 1;
    std::uint64_t seed = 0;
    MeasurementSet measure;
    int dim_cap = 0;            // 0 = derive from d, vary and the template
    long long coord_bound = kDefaultCoordBound;
    std::uint64_t match_trials = 2000;
    std::uint64_t budget = 10'000'000ull;
    int workers = 1;
};

struct SweepRow {
    double alpha_value = 0.0;
    int trials = 0;
    double no_core_rate = 0.0;
    std::optional<double> embed_success_rate; // empty when unmeasured or nothing attempted
    std::optional<double> match_rate;
    std::optional<double> mean_match_estimate;
    std::optional<long long> max_component_vertices;
};

namespace detail {

struct TrialOutcome {
    bool no_core = false;
    int embed = 0;   // 0 not attempted, 1 success, 2 failure
    int match = -1;  // -1 unmeasured
    double estimate = 0.0;
    bool has_estimate = false;
    long long max_comp = -1;
};

inline AlphaVector alpha_at(const SweepSpec& s, double value) {
    std::vector<double> e = s.alpha.entries();
    if (s.vary < 1 || s.vary > static_cast<int>(e.size()) + 1)
        throw PreconditionError("sweep: varying index must address or extend the alpha template");
    if (s.vary == static_cast<int>(e.size()) + 1) e.push_back(value);
    else e[static_cast<std::size_t>(s.vary) - 1] = value;
    return AlphaVector(std::move(e));
}

inline double grid_value(const SweepSpec& s, int i) {
    if (s.grid_steps == 1) return s.grid_start;
    return s.grid_start + (s.grid_stop - s.grid_start) * i / (s.grid_steps - 1);
}

// Everything in one trial is derived from this one hash, so trials are
// reproducible independent of worker scheduling.
inline TrialOutcome run_trial(const SweepSpec& s, const AlphaVector& alpha, int gi, int ti) {
    std::uint64_t tseed = hash_combine(hash_combine(mix64(s.seed), static_cast<std::uint64_t>(gi)),
                                       static_cast<std::uint64_t>(ti));
    TrialOutcome out;
    int dim_cap = s.dim_cap;
    if (dim_cap == 0) dim_cap = std::max({s.d, s.vary, s.alpha.size()});

    SimplicialComplex X = sample_complex(s.n, alpha, dim_cap, tseed);
    PeelResult peel = two_core(build_hypergraph(X, s.d));
    out.no_core = peel.core.empty();

    if (s.measure.embed && out.no_core) {
        try {
            SimplicialComplex P = pure_part(X, s.d);
            build_embedding(P, s.d, peel, hash_combine(tseed, 0xe3b0c44298ull), s.coord_bound);
            out.embed = 1;
        } catch (const std::exception&) {
            out.embed = 2;
        }
    }

    if (s.measure.match) {
        out.match = 0;
        for (int attempt = 0; attempt < 2; ++attempt) {
            std::uint64_t cseed = hash_combine(tseed, 0xc0f1ull + static_cast<std::uint64_t>(attempt));
            try {
                PointConfiguration cfg = random_configuration(s.n, 2 * s.d, s.coord_bound, cseed);
                out.match = has_radon_match(X, cfg, s.d, s.budget) ? 1 : 0;
                MatchReport est = sample_radon_matches(X, cfg, s.d, s.match_trials,
                                                       hash_combine(tseed, 0x5a3dull));
                double total = 1.0;
                for (int i = 0; i < 2 * s.d + 2; ++i)
                    total = total * (s.n - i) / (i + 1);
                out.estimate = (static_cast<double>(est.matches) / static_cast<double>(est.checked)) * total;
                out.has_estimate = true;
                break;
            } catch (const DegeneracyError&) {
                continue; // one resample of the configuration, then count as failure
            } catch (const std::exception&) {
                break; // budget or precondition: record as failure, keep sweeping
            }
        }
    }

    if (s.measure.components) {
        out.max_comp = 0;
        for (const auto& comp : weakly_connected_components(X, s.d)) {
            std::set<int> vs;
            for (const Face& f : comp) vs.insert(f.begin(), f.end());
            out.max_comp = std::max(out.max_comp, static_cast<long long>(vs.size()));
        }
    }
    return out;
}

} // namespace detail

// Monte Carlo sweep over one varying alpha coordinate. Trials are fanned out
// across workers but every number is a pure function of (spec), so the rows
// do not depend on scheduling.
inline std::vector<SweepRow> run_sweep(const SweepSpec& s) {
    if (s.grid_steps < 1 || s.trials < 1) throw PreconditionError("sweep: steps and trials must be >= 1");
    if (s.n < 0 || s.d < 1) throw PreconditionError("sweep: need n >= 0 and d >= 1");
    int workers = std::max(1, s.workers);

    std::vector<AlphaVector> alphas;
    for (int g = 0; g < s.grid_steps; ++g) alphas.push_back(detail::alpha_at(s, detail::grid_value(s, g)));

    std::vector<detail::TrialOutcome> outcomes(static_cast<std::size_t>(s.grid_steps) *
                                               static_cast<std::size_t>(s.trials));
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= outcomes.size()) return;
            int gi = static_cast<int>(i) / s.trials;
            int ti = static_cast<int>(i) % s.trials;
            outcomes[i] = detail::run_trial(s, alphas[static_cast<std::size_t>(gi)], gi, ti);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::vector<SweepRow> rows;
    for (int g = 0; g < s.grid_steps; ++g) {
        SweepRow row;
        row.alpha_value = detail::grid_value(s, g);
        row.trials = s.trials;
        int no_core = 0, attempts = 0, embed_ok = 0, match_hits = 0, est_count = 0;
        double est_sum = 0.0;
        long long max_comp = -1;
        for (int t = 0; t < s.trials; ++t) {
            const auto& o = outcomes[static_cast<std::size_t>(g) * static_cast<std::size_t>(s.trials) +
                                     static_cast<std::size_t>(t)];
            no_core += o.no_core ? 1 : 0;
            if (o.embed != 0) {
                ++attempts;
                embed_ok += o.embed == 1 ? 1 : 0;
            }
            if (o.match >= 0) match_hits += o.match;
            if (o.has_estimate) {
                est_sum += o.estimate;
                ++est_count;
            }
            max_comp = std::max(max_comp, o.max_comp);
        }
        row.no_core_rate = static_cast<double>(no_core) / s.trials;
        if (s.measure.embed && attempts > 0)
            row.embed_success_rate = static_cast<double>(embed_ok) / attempts;
        if (s.measure.match) {
            row.match_rate = static_cast<double>(match_hits) / s.trials;
            if (est_count > 0) row.mean_match_estimate = est_sum / est_count;
        }
        if (s.measure.components) row.max_component_vertices = max_comp;
        rows.push_back(row);
    }
    return rows;
}

inline const char* kSweepCsvHeader =
    "alpha,trials,no_core_rate,embed_success_rate,match_rate,mean_match_estimate,max_component_vertices";

inline std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << kSweepCsvHeader << '\n';
    auto rate = [&](const std::optional<double>& v) {
        if (!v) return std::string();
        std::ostringstream c;
        c << std::fixed << std::setprecision(6) << *v;
        return c.str();
    };
    for (const auto& r : rows) {
        std::ostringstream a;
        a << std::setprecision(10) << r.alpha_value;
        os << a.str() << ',' << r.trials << ',' << rate(r.no_core_rate) << ','
           << rate(r.embed_success_rate) << ',' << rate(r.match_rate) << ',';
        if (r.mean_match_estimate) {
            std::ostringstream e;
            e << std::setprecision(6) << *r.mean_match_estimate;
            os << e.str();
        }
        os << ',';
        if (r.max_component_vertices) os << *r.max_component_vertices;
        os << '\n';
    }
    return os.str();
}

inline nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["alpha"] = r.alpha_value;
        j["trials"] = r.trials;
        j["no_core_rate"] = r.no_core_rate;
        j["embed_success_rate"] = r.embed_success_rate ? nlohmann::json(*r.embed_success_rate)
                                                       : nlohmann::json(nullptr);
        j["match_rate"] = r.match_rate ? nlohmann::json(*r.match_rate) : nlohmann::json(nullptr);
        j["mean_match_estimate"] = r.mean_match_estimate ? nlohmann::json(*r.mean_match_estimate)
                                                         : nlohmann::json(nullptr);
        j["max_component_vertices"] = r.max_component_vertices
                                          ? nlohmann::json(*r.max_component_vertices)
                                          : nlohmann::json(nullptr);
        arr.push_back(std::move(j));
    }
    return arr;
}

} // namespace rsc
