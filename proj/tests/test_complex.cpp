#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <set>

#include <rsc/complex.hpp>
#include <rsc/rng.hpp>

using namespace rsc;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

SimplicialComplex make_complex(int n, int dim_cap, std::vector<std::vector<Face>> upper) {
    SimplicialComplex x;
    x.n = n;
    x.dim_cap = dim_cap;
    x.faces.assign(static_cast<std::size_t>(dim_cap) + 1, {});
    for (int v = 0; v < n; ++v) x.faces[0].push_back({v});
    for (std::size_t i = 0; i < upper.size(); ++i) x.faces[i + 1] = upper[i];
    return x;
}

SimplicialComplex full_simplex(int n, int dim_cap) {
    SimplicialComplex x = sample_complex(n, AlphaVector(std::vector<double>(
                                                static_cast<std::size_t>(dim_cap), 0.0)),
                                         dim_cap, 0);
    return x;
}

std::set<Face> all_faces(const SimplicialComplex& x) {
    std::set<Face> s;
    for (const auto& level : x.faces)
        for (const Face& f : level) s.insert(f);
    return s;
}

} // namespace

TEST_CASE("sampling is deterministic in the seed") {
    auto a = sample_complex(40, AlphaVector{0.6, 1.1}, 2, 123);
    auto b = sample_complex(40, AlphaVector{0.6, 1.1}, 2, 123);
    auto c = sample_complex(40, AlphaVector{0.6, 1.1}, 2, 124);
    REQUIRE(a.faces == b.faces);
    REQUIRE(a.faces != c.faces);
}

TEST_CASE("samples are downward closed and well formed") {
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
        auto x = sample_complex(25, AlphaVector{0.4, 0.8, 1.2}, 3, seed);
        REQUIRE_NOTHROW(validate(x));
    }
}

TEST_CASE("alpha entries beyond the list switch levels off") {
    auto x = sample_complex(30, AlphaVector{0.3}, 3, 7);
    REQUIRE(x.faces[2].empty());
    REQUIRE(x.faces[3].empty());
    auto y = sample_complex(30, AlphaVector{0.3, kInf, 0.0}, 3, 7);
    REQUIRE(y.faces[2].empty());
    REQUIRE(y.faces[3].empty()); // nothing above an empty level either
}

TEST_CASE("monotone coupling: raising alpha only removes faces") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint64_t seed = rng.next();
        double a1 = rng.unit() * 1.5;
        double a2 = rng.unit() * 2.0;
        AlphaVector lo{a1, a2};
        AlphaVector hi{a1 + rng.unit(), a2 + rng.unit()};
        REQUIRE(lo.dominated_by(hi));
        auto big = sample_complex(20, lo, 2, seed);
        auto small = sample_complex(20, hi, 2, seed);
        auto bf = all_faces(big);
        for (const Face& f : all_faces(small)) REQUIRE(bf.count(f) == 1);
    }
}

TEST_CASE("complete complex face counts") {
    auto x = sample_complex(5, AlphaVector{0.0, 0.0}, 2, 9);
    REQUIRE(f_vector(x) == FVector{5, 10, 10});
}

TEST_CASE("f_vector on the listed fixtures") {
    REQUIRE(f_vector(full_simplex(4, 3)) == FVector{4, 6, 4, 1});
    REQUIRE(f_vector(make_complex(5, 0, {})) == FVector{5});
    auto cycle3 = make_complex(3, 1, {{{0, 1}, {0, 2}, {1, 2}}});
    REQUIRE(f_vector(cycle3) == FVector{3, 3});
    SimplicialComplex empty;
    empty.n = 0;
    empty.dim_cap = 0;
    empty.faces.assign(1, {});
    REQUIRE(f_vector(empty).empty());
    REQUIRE(dimension(empty) == -1);
}

TEST_CASE("pure part keeps exactly the closure of the d-faces") {
    // triangle {0,1,2} plus pendant edge {2,3}
    auto x = make_complex(4, 2, {{{0, 1}, {0, 2}, {1, 2}, {2, 3}}, {{0, 1, 2}}});
    REQUIRE_NOTHROW(validate(x));
    auto p = pure_part(x, 2);
    REQUIRE(p.faces[0] == std::vector<Face>{{0}, {1}, {2}});
    REQUIRE(p.faces[1] == std::vector<Face>{{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(p.faces[2] == std::vector<Face>{{0, 1, 2}});
    REQUIRE(p.n == 4); // labels preserved even though vertex 3 dropped out

    auto none = pure_part(make_complex(6, 2, {{{0, 1}}, {}}), 2);
    REQUIRE(dimension(none) == -1);

    // two triangles sharing an edge close to themselves
    auto two = make_complex(4, 2, {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}},
                                   {{0, 1, 2}, {0, 1, 3}}});
    REQUIRE_NOTHROW(validate(two));
    auto ptwo = pure_part(two, 2);
    REQUIRE(ptwo.faces == two.faces);
}

TEST_CASE("skeleton, membership and dimension fixtures") {
    auto sk = skeleton(full_simplex(4, 3), 1);
    REQUIRE(f_vector(sk) == FVector{4, 6});
    REQUIRE(sk.dim_cap == 1);

    auto cycle3 = make_complex(3, 2, {{{0, 1}, {0, 2}, {1, 2}}, {}});
    REQUIRE_FALSE(contains_face(cycle3, {0, 1, 2}));
    REQUIRE(contains_face(cycle3, {0, 1}));
    REQUIRE(contains_face(cycle3, {2}));
    REQUIRE_FALSE(contains_face(cycle3, {3}));
    REQUIRE(dimension(make_complex(5, 0, {})) == 0);
}

TEST_CASE("edge counts match the binomial mean within three sigma") {
    const int n = 100;
    const int seeds = 200;
    const double p = std::pow(n, -0.5);
    const double mean = 4950 * p; // C(100,2) * p = 495
    const double sigma_mean = std::sqrt(4950 * p * (1 - p) / seeds);
    double total = 0;
    for (int s = 0; s < seeds; ++s)
        total += static_cast<double>(sample_complex(n, AlphaVector{0.5, kInf}, 2, 1000 + s).faces[1].size());
    REQUIRE(std::abs(total / seeds - mean) <= 3 * sigma_mean);
}

TEST_CASE("triangle counts above a full 1-skeleton match the binomial mean") {
    const int n = 40;
    const int seeds = 60;
    const double p = 1.0 / n;
    const double cand = 9880; // C(40,3)
    const double mean = cand * p;
    const double sigma_mean = std::sqrt(cand * p * (1 - p) / seeds);
    double total = 0;
    for (int s = 0; s < seeds; ++s)
        total += static_cast<double>(sample_complex(n, AlphaVector{0.0, 1.0}, 2, 20250 + s).faces[2].size());
    REQUIRE(std::abs(total / seeds - mean) <= 3 * sigma_mean);
}

TEST_CASE("complex JSON round trip is exact and validated") {
    auto x = sample_complex(18, AlphaVector{0.5, 0.9}, 2, 77);
    auto j = complex_to_json(x);
    auto y = complex_from_json(j);
    REQUIRE(x.n == y.n);
    REQUIRE(x.dim_cap == y.dim_cap);
    REQUIRE(x.faces == y.faces);
    REQUIRE(complex_to_json(y) == j);

    auto broken = j;
    broken["faces"][1] = std::vector<Face>{{0, 5}}; // triangle level without its edges
    REQUIRE_THROWS_AS(complex_from_json(broken), PreconditionError);
}

TEST_CASE("malformed alpha vectors are rejected") {
    REQUIRE_THROWS_AS(AlphaVector{-0.1}, PreconditionError);
    REQUIRE_THROWS_AS(AlphaVector::parse("0.5,,1"), PreconditionError);
    REQUIRE_THROWS_AS(AlphaVector::parse("abc"), PreconditionError);
    REQUIRE(AlphaVector::parse("0.5, inf ,2").get(2) == kInf);
    REQUIRE(AlphaVector::parse("1.25").get(5) == kInf);
}
