#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "egospread/census.hpp"
#include "egospread/cloud.hpp"
#include "egospread/graph.hpp"
#include "egospread/small_graph.hpp"

using namespace egospread;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph complement_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (!g.has_edge(i, j)) edges.emplace_back(i, j);
    return Graph(g.vertex_count(), std::move(edges));
}

Graph fig4_graph() {
    std::istringstream in("0 1\n1 2\n1 3\n2 3\n2 4\n3 5\n4 6\n5 6\n1 4\n");
    return load_edge_list(in).graph;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

void check_census_equals_oracle(const Graph& g) {
    MotifCensus c = census(g);
    auto o3 = brute_force_census3(g);
    auto o4 = brute_force_census4(g);
    for (size_t i = 0; i < 4; ++i) CHECK(c.counts3[i] == o3[i]);
    for (size_t i = 0; i < 11; ++i) CHECK(c.counts4[i] == o4[i]);
}

}  // namespace

TEST_CASE("conversion tables: inverse really inverts") {
    const auto& t = conversion_tables();
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            i64 dot = 0;
            for (size_t k = 0; k < 4; ++k) dot += t.inverse3[i][k] * t.contain3[k][j];
            CHECK(dot == (i == j ? 1 : 0));
        }
    for (size_t i = 0; i < 11; ++i)
        for (size_t j = 0; j < 11; ++j) {
            i64 dot = 0;
            for (size_t k = 0; k < 11; ++k) dot += t.inverse4[i][k] * t.contain4[k][j];
            CHECK(dot == (i == j ? 1 : 0));
        }
}

TEST_CASE("closed order-3 conversion rederived") {
    // #K3 = t, #P3 = w - 3t, #P3bar = m(n-2) - 2#P3 - 3t, #K3bar = C(n,3) - rest.
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(9, 0.4, rng);
        i64 n = g.vertex_count(), m = g.edge_count();
        i64 w = 0;
        for (int v = 0; v < n; ++v) w += binomial(g.degree(v), 2);
        i64 t = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    t += g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
        auto oracle = brute_force_census3(g);
        CHECK(oracle[3] == t);
        CHECK(oracle[2] == w - 3 * t);
        CHECK(oracle[1] == m * (n - 2) - 2 * (w - 3 * t) - 3 * t);
        CHECK(oracle[0] == binomial(n, 3) - oracle[1] - oracle[2] - oracle[3]);
    }
}

TEST_CASE("census: fig4 vertex 1 ego") {
    Graph ego = ego_network(fig4_graph(), 1);
    MotifCensus c = census(ego);
    CHECK(c.n == 4);
    CHECK(c.m == 2);
    CHECK(c.counts3[size_t(catalog_index_by_slug("k3bar"))] == 1);
    CHECK(c.counts3[size_t(catalog_index_by_slug("p3bar"))] == 2);
    CHECK(c.counts3[size_t(catalog_index_by_slug("p3"))] == 1);
    CHECK(c.counts3[size_t(catalog_index_by_slug("k3"))] == 0);
    // The single 4-subset induces a path plus isolated vertex.
    for (int i = kOrder3Count; i < kCatalogSize; ++i)
        CHECK(c.count(i) == (catalog_entry(i).slug == "p3v" ? 1 : 0));
    check_census_equals_oracle(ego);
}

TEST_CASE("census: K4 ego identity case") {
    MotifCensus c = census(complete_graph(4));
    CHECK(c.count(catalog_index_by_slug("k4")) == 1);
    for (int i = kOrder3Count; i < kCatalogSize; ++i)
        if (catalog_entry(i).slug != "k4") CHECK(c.count(i) == 0);
    CHECK(c.count(catalog_index_by_slug("k3")) == 4);
}

TEST_CASE("census: empty and tiny egos") {
    MotifCensus c0 = census(Graph(0, {}));
    CHECK(c0.counts3[0] == 0);
    MotifCensus c5 = census(Graph(5, {}));
    CHECK(c5.counts3[size_t(catalog_index_by_slug("k3bar"))] == 10);
    CHECK(c5.counts4[0] == 5);  // K4bar
    auto oracle = brute_force_census3(Graph(5, {}));
    CHECK(oracle[0] == 10);
    MotifCensus c2 = census(Graph(2, {{0, 1}}));
    CHECK(c2.m == 1);
    for (i64 v : c2.counts3) CHECK(v == 0);
}

TEST_CASE("brute force census: C5 four-subsets") {
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto o4 = brute_force_census4(c5);
    CHECK(o4[size_t(catalog_index_by_slug("p4") - kOrder3Count)] == 5);
    i64 total = 0;
    for (i64 v : o4) total += v;
    CHECK(total == 5);
    check_census_equals_oracle(c5);
}

TEST_CASE("brute force census: size guard") {
    CHECK_THROWS_AS(brute_force_census4(Graph(400, {})), DomainError);
}

TEST_CASE("census equals oracle on random graphs") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + int(rng() % 10);
        double p = 0.1 + 0.8 * double(rng() % 100) / 99.0;
        check_census_equals_oracle(random_graph(n, p, rng));
    }
    for (const auto& e : catalog()) check_census_equals_oracle(to_graph(e.graph));
}

TEST_CASE("census: merge path agrees with bitset path") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(4 + int(rng() % 14), 0.35, rng);
        MotifCensus a = census(g);
        MotifCensus b = detail::census_merge_path(g);
        CHECK(a.counts3 == b.counts3);
        CHECK(a.counts4 == b.counts4);
    }
}

TEST_CASE("census: complement duality") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(4 + int(rng() % 8), 0.5, rng);
        MotifCensus c = census(g);
        MotifCensus cc = census(complement_graph(g));
        for (int i = 0; i < kCatalogSize; ++i)
            CHECK(c.count(i) == cc.count(catalog_entry(i).complement_index));
    }
}

TEST_CASE("point cloud: fig4 coordinates are exact rationals") {
    Graph g = fig4_graph();
    auto censuses = ego_censuses(g, 1);
    PointCloud cloud = cloud_from_censuses(censuses, catalog_index_by_slug("p3"), 1);

    const CloudPoint* v1 = nullptr;
    const CloudPoint* v6 = nullptr;
    for (const auto& p : cloud.points) {
        if (p.vertex == 1) v1 = &p;
        if (p.vertex == 6) v6 = &p;
    }
    REQUIRE(v1 != nullptr);
    REQUIRE(v6 != nullptr);
    CHECK(v1->x_num == 2);
    CHECK(v1->x_den == 6);
    CHECK(v1->y_num == 1);
    CHECK(v1->y_den == 4);
    CHECK(v1->x == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(v1->y == 0.25);
    CHECK(v6->x_num == 0);
    CHECK(v6->x == 0.0);
}

TEST_CASE("point cloud: complete graph saturates at (1,1)") {
    Graph k20 = complete_graph(20);
    PointCloud cloud = localized_point_cloud(k20, catalog_index_by_slug("k3"), 10);
    CHECK(cloud.points.size() == 20);
    for (const auto& p : cloud.points) {
        CHECK(p.x == 1.0);
        CHECK(p.y == 1.0);
    }
}

TEST_CASE("point cloud: degree filter and empty-cloud error") {
    Graph g = fig4_graph();
    PointCloud cloud = localized_point_cloud(g, 0, 3);
    for (const auto& p : cloud.points) CHECK(p.degree >= 3);
    CHECK_THROWS_AS(localized_point_cloud(g, 0, 100), DomainError);
}

TEST_CASE("point cloud: deterministic across worker counts") {
    Graph g = fig4_graph();
    auto a = ego_censuses(g, 1, 1);
    auto b = ego_censuses(g, 1, 8);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].vertex == b[i].vertex);
        CHECK(a[i].census.counts4 == b[i].census.counts4);
    }
}

TEST_CASE("x_axis_coverage") {
    PointCloud c;
    c.points = {{0, 1, 0, 1, 0, 1, 0.0, 0.0}, {1, 1, 1, 2, 0, 1, 0.5, 0.0}, {2, 1, 1, 1, 0, 1, 1.0, 0.0}};
    CHECK(x_axis_coverage(c));
    PointCloud d;
    d.points = {{0, 1, 2, 5, 0, 1, 0.4, 0.0}, {1, 1, 1, 1, 0, 1, 1.0, 0.0}};
    CHECK_FALSE(x_axis_coverage(d));
    CHECK(x_axis_coverage(d, 0.45, 0.95));
}

TEST_CASE("cloud csv shape") {
    Graph g = fig4_graph();
    PointCloud cloud = localized_point_cloud(g, catalog_index_by_slug("p3"), 1);
    std::string csv = cloud_to_csv(cloud);
    CHECK(csv.rfind("vertex,degree,x,y\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == i64(cloud.points.size()) + 1);
    std::string dump = census_dump_csv(ego_censuses(g, 1));
    CHECK(dump.find(",k3pendant,") != std::string::npos);
}
