// Command-line driver: sampling, classification, collapse, embedding, match
// counting, census, and threshold sweeps. Identical invocations produce
// byte-identical output; everything randomized is derived from --seed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <rsc/rsc.hpp>

namespace {

struct CommonInput {
    std::string in_path;
    std::string config_path;
    std::string out_path;
    int n = 0;
    int d = 1;
    int dim_cap = 0;
    std::string alpha_text;
    std::uint64_t seed = 0;
    long long coord_bound = rsc::kDefaultCoordBound;
    std::uint64_t budget = 10'000'000ull;
};

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw rsc::PreconditionError("cannot open output file " + out_path);
    f << text;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw rsc::PreconditionError("cannot open input file " + path);
    try {
        return nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw rsc::PreconditionError("cannot parse " + path + ": " + e.what());
    }
}

int resolved_dim_cap(const CommonInput& c, const rsc::AlphaVector& alpha, int floor_dim) {
    if (c.dim_cap > 0) return c.dim_cap;
    return std::max({1, floor_dim, alpha.size()});
}

rsc::SimplicialComplex obtain_complex(const CommonInput& c, int floor_dim) {
    if (!c.in_path.empty()) return rsc::complex_from_json(load_json(c.in_path));
    if (c.alpha_text.empty())
        throw rsc::PreconditionError("need --in FILE or --n/--alpha to define a complex");
    rsc::AlphaVector alpha = rsc::AlphaVector::parse(c.alpha_text);
    return rsc::sample_complex(c.n, alpha, resolved_dim_cap(c, alpha, floor_dim), c.seed);
}

rsc::PointConfiguration obtain_config(const CommonInput& c, int n, int m) {
    if (!c.config_path.empty()) {
        rsc::PointConfiguration cfg = rsc::config_from_json(load_json(c.config_path));
        if (cfg.m != m) throw rsc::PreconditionError("--config-in has the wrong ambient dimension");
        return cfg;
    }
    std::uint64_t cfg_seed = rsc::hash_combine(rsc::mix64(c.seed), 0x636667ull);
    return rsc::random_configuration(n, m, c.coord_bound, cfg_seed);
}

std::string json_line(const nlohmann::json& j) { return j.dump() + "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"random simplicial complexes: sampling, collapse, embedding, Radon matches"};
    app.require_subcommand(1);
    CommonInput c;

    auto* cmd_sample = app.add_subcommand("sample", "sample a complex and print its JSON");
    cmd_sample->add_option("--n", c.n, "vertex count")->required();
    cmd_sample->add_option("--alpha", c.alpha_text, "exponent list, e.g. 0,2.5 (token inf allowed)")->required();
    cmd_sample->add_option("--dim-cap", c.dim_cap, "highest face dimension to sample (default: alpha length)");
    cmd_sample->add_option("--seed", c.seed, "random seed");
    cmd_sample->add_option("--out", c.out_path, "output path (default stdout)");

    auto* cmd_classify = app.add_subcommand("classify", "which side of the embeddability threshold alpha is on");
    cmd_classify->add_option("--d", c.d, "complex dimension")->required();
    cmd_classify->add_option("--alpha", c.alpha_text, "exponent list")->required();
    cmd_classify->add_option("--out", c.out_path, "output path (default stdout)");

    auto* cmd_janson = app.add_subcommand("janson", "minimum overlap exponent for match concentration");
    cmd_janson->add_option("--d", c.d, "complex dimension")->required();
    cmd_janson->add_option("--alpha", c.alpha_text, "exponent list")->required();
    cmd_janson->add_option("--out", c.out_path, "output path (default stdout)");

    auto* cmd_collapse = app.add_subcommand("collapse", "peel the d-face hypergraph to its 2-core");
    cmd_collapse->add_option("--d", c.d, "face dimension to peel")->required();
    cmd_collapse->add_option("--in", c.in_path, "complex JSON file (otherwise sample)");
    cmd_collapse->add_option("--n", c.n, "vertex count (when sampling)");
    cmd_collapse->add_option("--alpha", c.alpha_text, "exponent list (when sampling)");
    cmd_collapse->add_option("--dim-cap", c.dim_cap, "sampling dimension cap");
    cmd_collapse->add_option("--seed", c.seed, "random seed");
    cmd_collapse->add_option("--out", c.out_path, "output path (default stdout)");

    auto* cmd_embed = app.add_subcommand("embed", "build a verified straight-line embedding in R^2d");
    cmd_embed->add_option("--d", c.d, "complex dimension")->required();
    cmd_embed->add_option("--in", c.in_path, "complex JSON file (otherwise sample)");
    cmd_embed->add_option("--n", c.n, "vertex count (when sampling)");
    cmd_embed->add_option("--alpha", c.alpha_text, "exponent list (when sampling)");
    cmd_embed->add_option("--dim-cap", c.dim_cap, "sampling dimension cap");
    cmd_embed->add_option("--seed", c.seed, "random seed (sampling and placement)");
    cmd_embed->add_option("--coord-bound", c.coord_bound, "fresh points take integer coords in [0, bound)");
    cmd_embed->add_option("--out", c.out_path, "output path (default stdout)");

    std::string mode = "exhaustive";
    std::uint64_t trials = 10'000;
    auto* cmd_radon = app.add_subcommand("radon-count", "count Radon matches of a complex under a configuration");
    cmd_radon->add_option("--d", c.d, "complex dimension")->required();
    cmd_radon->add_option("--in", c.in_path, "complex JSON file (otherwise sample)");
    cmd_radon->add_option("--n", c.n, "vertex count (when sampling)");
    cmd_radon->add_option("--alpha", c.alpha_text, "exponent list (when sampling)");
    cmd_radon->add_option("--dim-cap", c.dim_cap, "sampling dimension cap");
    cmd_radon->add_option("--seed", c.seed, "random seed");
    cmd_radon->add_option("--config-in", c.config_path, "point configuration JSON (otherwise random)");
    cmd_radon->add_option("--coord-bound", c.coord_bound, "random configuration coordinate bound");
    cmd_radon->add_option("--mode", mode, "exhaustive | sampled | exists")
        ->check(CLI::IsMember({"exhaustive", "sampled", "exists"}));
    cmd_radon->add_option("--trials", trials, "subsets to draw in sampled mode");
    cmd_radon->add_option("--budget", c.budget, "exhaustive enumeration cap");
    cmd_radon->add_option("--out", c.out_path, "output path (default stdout)");

    int census_m = 2;
    auto* cmd_census = app.add_subcommand("census", "balanced Radon-split fraction of a configuration");
    cmd_census->add_option("--config-in", c.config_path, "point configuration JSON (otherwise random)");
    cmd_census->add_option("--n", c.n, "point count (when random)");
    cmd_census->add_option("--m", census_m, "ambient dimension (when random)");
    cmd_census->add_option("--seed", c.seed, "random seed");
    cmd_census->add_option("--coord-bound", c.coord_bound, "random configuration coordinate bound");
    cmd_census->add_option("--budget", c.budget, "exhaustive enumeration cap");
    cmd_census->add_option("--out", c.out_path, "output path (default stdout)");

    rsc::SweepSpec spec;
    std::string grid_text, measure_text = "core", format = "csv";
    auto* cmd_sweep = app.add_subcommand("sweep", "Monte Carlo rates across a grid of one alpha coordinate");
    cmd_sweep->add_option("--d", spec.d, "complex dimension")->required();
    cmd_sweep->add_option("--n", spec.n, "vertex count")->required();
    cmd_sweep->add_option("--alpha", c.alpha_text, "alpha template (varying entry overwritten)");
    cmd_sweep->add_option("--vary", spec.vary, "1-based index of the varying alpha entry");
    cmd_sweep->add_option("--grid", grid_text, "start:stop:steps")->required();
    cmd_sweep->add_option("--trials", spec.trials, "trials per grid point");
    cmd_sweep->add_option("--seed", spec.seed, "master seed");
    cmd_sweep->add_option("--measure", measure_text, "comma list from core,embed,match,components");
    cmd_sweep->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    cmd_sweep->add_option("--dim-cap", spec.dim_cap, "sampling dimension cap");
    cmd_sweep->add_option("--coord-bound", spec.coord_bound, "configuration coordinate bound");
    cmd_sweep->add_option("--match-trials", spec.match_trials, "sampled subsets per trial for the estimate");
    cmd_sweep->add_option("--budget", spec.budget, "exhaustive enumeration cap");
    cmd_sweep->add_option("--workers", spec.workers, "parallel workers");
    cmd_sweep->add_option("--out", c.out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_sample->parsed()) {
            rsc::AlphaVector alpha = rsc::AlphaVector::parse(c.alpha_text);
            auto X = rsc::sample_complex(c.n, alpha, resolved_dim_cap(c, alpha, 1), c.seed);
            write_output(c.out_path, json_line(rsc::complex_to_json(X)));
        } else if (cmd_classify->parsed()) {
            auto r = rsc::classify(c.d, rsc::AlphaVector::parse(c.alpha_text));
            nlohmann::json j{{"class", rsc::regime_name(r.regime)}};
            j["exponent"] = std::isfinite(r.exponent) ? nlohmann::json(r.exponent) : nlohmann::json(nullptr);
            write_output(c.out_path, json_line(j));
        } else if (cmd_janson->parsed()) {
            auto r = rsc::janson_exponent(c.d, rsc::AlphaVector::parse(c.alpha_text));
            nlohmann::json j{{"argmin", r.argmin}};
            j["min_exponent"] =
                std::isfinite(r.min_exponent) ? nlohmann::json(r.min_exponent) : nlohmann::json(nullptr);
            write_output(c.out_path, json_line(j));
        } else if (cmd_collapse->parsed()) {
            auto X = obtain_complex(c, c.d);
            auto peel = rsc::two_core(rsc::build_hypergraph(X, c.d));
            write_output(c.out_path, json_line(rsc::peel_to_json(peel)));
        } else if (cmd_embed->parsed()) {
            auto X = obtain_complex(c, c.d);
            rsc::SimplicialComplex P;
            if (c.d <= X.dim_cap) {
                P = rsc::pure_part(X, c.d);
            } else {
                P.n = X.n; // no d-faces at all: every vertex is placed freely
                P.dim_cap = c.d;
                P.faces.assign(static_cast<std::size_t>(c.d) + 1, {});
            }
            auto peel = rsc::two_core(rsc::build_hypergraph(P, c.d));
            std::uint64_t build_seed = rsc::hash_combine(rsc::mix64(c.seed), 0x656d626564ull);
            auto cfg = rsc::build_embedding(P, c.d, peel, build_seed, c.coord_bound);
            write_output(c.out_path, json_line(rsc::config_to_json(cfg)));
        } else if (cmd_radon->parsed()) {
            auto X = obtain_complex(c, c.d);
            auto cfg = obtain_config(c, X.n, 2 * c.d);
            if (mode == "exists") {
                bool has = rsc::has_radon_match(X, cfg, c.d, c.budget);
                write_output(c.out_path, json_line(nlohmann::json{{"has_match", has}}));
            } else {
                rsc::MatchReport r = mode == "sampled"
                                         ? rsc::sample_radon_matches(X, cfg, c.d, trials, c.seed)
                                         : rsc::count_radon_matches(X, cfg, c.d, c.budget);
                write_output(c.out_path, json_line(rsc::match_report_to_json(r)));
            }
        } else if (cmd_census->parsed()) {
            rsc::PointConfiguration cfg;
            if (!c.config_path.empty()) cfg = rsc::config_from_json(load_json(c.config_path));
            else cfg = obtain_config(c, c.n, census_m);
            auto r = rsc::balanced_split_census(cfg, c.budget);
            write_output(c.out_path, json_line(rsc::match_report_to_json(r)));
        } else if (cmd_sweep->parsed()) {
            if (!c.alpha_text.empty()) spec.alpha = rsc::AlphaVector::parse(c.alpha_text);
            else if (spec.vary != 1)
                throw rsc::PreconditionError("--vary beyond 1 needs an --alpha template");
            else spec.alpha = rsc::AlphaVector{0.0};
            std::istringstream gs(grid_text);
            std::string a, b, k;
            if (!std::getline(gs, a, ':') || !std::getline(gs, b, ':') || !std::getline(gs, k))
                throw rsc::PreconditionError("--grid must look like start:stop:steps");
            try {
                spec.grid_start = std::stod(a);
                spec.grid_stop = std::stod(b);
                spec.grid_steps = std::stoi(k);
            } catch (const std::exception&) {
                throw rsc::PreconditionError("--grid must look like start:stop:steps");
            }
            spec.measure = rsc::MeasurementSet{};
            std::istringstream ms(measure_text);
            std::string item;
            while (std::getline(ms, item, ',')) {
                if (item == "core") spec.measure.core = true;
                else if (item == "embed") spec.measure.embed = true;
                else if (item == "match") spec.measure.match = true;
                else if (item == "components") spec.measure.components = true;
                else throw rsc::PreconditionError("unknown measurement '" + item + "'");
            }
            auto rows = rsc::run_sweep(spec);
            if (format == "csv") write_output(c.out_path, rsc::sweep_to_csv(rows));
            else write_output(c.out_path, rsc::sweep_to_json(rows).dump() + "\n");
        }
    } catch (const rsc::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rsc::DegeneracyError& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return 3;
    } catch (const rsc::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const rsc::ConstructiveFailureError& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
