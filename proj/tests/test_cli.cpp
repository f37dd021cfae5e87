#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>
#include <rsc/rsc.hpp>

// RSC_CLI_PATH is injected by the build so these tests drive the real binary.

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::filesystem::path scratch_dir() {
    static auto dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("rsc_cli_tests_" + std::to_string(static_cast<long>(::getpid())));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
    auto p = scratch_dir() / name;
    std::ofstream f(p, std::ios::binary);
    f << text;
    return p;
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    auto out = scratch_dir() / ("stdout" + std::to_string(counter));
    auto err = scratch_dir() / ("stderr" + std::to_string(counter));
    ++counter;
    std::string cmd = std::string("\"") + RSC_CLI_PATH + "\" " + args + " > " + out.string() +
                      " 2> " + err.string();
    int rc = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

} // namespace

TEST_CASE("classify prints one json line") {
    auto r = run_cli("classify --d 2 --alpha 0,2.5");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "{\"class\":\"Sparse\",\"exponent\":-0.5}\n");
    REQUIRE(r.err.empty());

    auto crit = run_cli("classify --d 1 --alpha 1");
    REQUIRE(crit.code == 0);
    REQUIRE(crit.out == "{\"class\":\"Critical\",\"exponent\":0.0}\n");

    auto inf = run_cli("classify --d 1 --alpha inf");
    REQUIRE(inf.code == 0);
    REQUIRE(inf.out == "{\"class\":\"Sparse\",\"exponent\":null}\n");
}

TEST_CASE("janson prints the minimizing overlap profile") {
    auto r = run_cli("janson --d 1 --alpha 0");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "{\"argmin\":[1,1,1,2],\"min_exponent\":5.0}\n");
}

TEST_CASE("--out writes the same bytes to a file and leaves stdout empty") {
    auto p = scratch_dir() / "classify_out.json";
    auto r = run_cli("classify --d 2 --alpha 0,2.5 --out " + p.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out.empty());
    REQUIRE(slurp(p) == "{\"class\":\"Sparse\",\"exponent\":-0.5}\n");
}

TEST_CASE("repeated invocations are byte identical") {
    std::string args = "sample --n 30 --alpha 1.1 --seed 17";
    auto a = run_cli(args);
    auto b = run_cli(args);
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    REQUIRE(j["n"].get<int>() == 30);
    REQUIRE(j["dim_cap"].get<int>() == 1);

    std::string sweep = "sweep --d 1 --n 30 --grid 0.8:1.4:2 --trials 4 --seed 3 "
                        "--measure core,components --workers 3";
    auto s1 = run_cli(sweep);
    auto s2 = run_cli(sweep);
    REQUIRE(s1.code == 0);
    REQUIRE(s1.out == s2.out);
    REQUIRE(s1.out.rfind(rsc::kSweepCsvHeader, 0) == 0);
}

TEST_CASE("sample, collapse, embed and radon-count compose through files") {
    auto x_path = scratch_dir() / "sparse_graph.json";
    auto sample = run_cli("sample --n 40 --alpha 1.3 --seed 11 --out " + x_path.string());
    REQUIRE(sample.code == 0);

    auto collapse = run_cli("collapse --d 1 --in " + x_path.string());
    REQUIRE(collapse.code == 0);
    auto pj = nlohmann::json::parse(collapse.out);
    REQUIRE(pj["core"].empty());
    REQUIRE(pj.contains("order"));

    auto embed = run_cli("embed --d 1 --seed 11 --in " + x_path.string());
    REQUIRE(embed.code == 0);
    auto cfg = rsc::config_from_json(nlohmann::json::parse(embed.out));
    REQUIRE(cfg.m == 2);
    REQUIRE(static_cast<int>(cfg.points.size()) == 40);
    auto X = rsc::complex_from_json(nlohmann::json::parse(slurp(x_path)));
    REQUIRE(rsc::verify_embedding(rsc::pure_part(X, 1), cfg, 1));

    auto exists = run_cli("radon-count --d 1 --mode exists --seed 4 --in " + x_path.string());
    REQUIRE(exists.code == 0);
    REQUIRE(nlohmann::json::parse(exists.out)["has_match"].is_boolean());
}

TEST_CASE("radon-count reports both enumeration modes") {
    auto r = run_cli("radon-count --d 1 --n 10 --alpha 0.2 --seed 2 --mode exhaustive");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["mode"] == "exhaustive");
    REQUIRE(j["checked"].get<long long>() == 210);

    auto s = run_cli("radon-count --d 1 --n 10 --alpha 0.2 --seed 2 --mode sampled --trials 500");
    REQUIRE(s.code == 0);
    auto js = nlohmann::json::parse(s.out);
    REQUIRE(js["mode"] == "sampled");
    REQUIRE(js["checked"].get<long long>() == 500);
}

TEST_CASE("census counts balanced splits of a random configuration") {
    auto r = run_cli("census --n 8 --m 2 --seed 6");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["mode"] == "exhaustive");
    REQUIRE(j["checked"].get<long long>() == 70);
    REQUIRE(j["balanced_hits"].get<long long>() * 5 >= 70);
}

TEST_CASE("sweep emits json rows on request") {
    auto r = run_cli("sweep --d 1 --n 20 --grid 1.0:1.0:1 --trials 2 --seed 1 --format json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    REQUIRE(j[0]["alpha"].get<double>() == 1.0);
    REQUIRE(j[0]["embed_success_rate"].is_null());
}

TEST_CASE("usage problems exit with code 2") {
    REQUIRE(run_cli("classify --d 1").code == 2);
    REQUIRE(run_cli("classify --d 1 --alpha peanuts").code == 2);
    REQUIRE(run_cli("radon-count --d 1 --n 10 --alpha 0.5 --mode bogus").code == 2);
    REQUIRE(run_cli("nonsense").code == 2);

    auto c = run_cli("collapse --d 1");
    REQUIRE(c.code == 2);
    REQUIRE(c.err.find("need --in") != std::string::npos);

    auto v = run_cli("sweep --d 1 --n 10 --grid 0:1:2 --vary 2");
    REQUIRE(v.code == 2);
}

TEST_CASE("degenerate or over-budget work exits with code 3") {
    auto b = run_cli("radon-count --d 1 --n 60 --alpha 0.4 --seed 5 --mode exhaustive --budget 10");
    REQUIRE(b.code == 3);
    REQUIRE(b.err.find("budget") != std::string::npos);

    auto tri = write_file("triangle.json", "{\"n\":3,\"dim_cap\":1,\"faces\":[[[0,1],[0,2],[1,2]]]}");
    auto e = run_cli("embed --d 1 --in " + tri.string());
    REQUIRE(e.code == 3);
    REQUIRE(e.err.find("construction failed") != std::string::npos);

    auto col = write_file("collinear.json",
                          "{\"m\":2,\"points\":[[0,0],[1,1],[2,2],[3,3]]}");
    auto d = run_cli("census --config-in " + col.string());
    REQUIRE(d.code == 3);
    REQUIRE(d.err.find("degenerate") != std::string::npos);
}
