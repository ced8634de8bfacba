#include "egospread/cloud.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "egospread/errors.hpp"

namespace egospread {

std::vector<VertexCensus> ego_censuses(const Graph& g, int min_degree, int workers) {
    if (min_degree < 0) throw DomainError("min_degree must be nonnegative");
    int n = g.vertex_count();
    std::vector<char> qualifies(size_t(n), 0);
    std::vector<MotifCensus> results(size_t(n));
    for (int v = 0; v < n; ++v) qualifies[size_t(v)] = g.degree(v) >= min_degree;

    if (workers <= 0) workers = int(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    std::atomic<int> next{0};
    auto run = [&] {
        for (int v = next.fetch_add(1); v < n; v = next.fetch_add(1))
            if (qualifies[size_t(v)]) results[size_t(v)] = census(ego_network(g, v));
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }

    std::vector<VertexCensus> out;
    for (int v = 0; v < n; ++v)
        if (qualifies[size_t(v)]) out.push_back({v, g.degree(v), results[size_t(v)]});
    return out;
}

PointCloud cloud_from_censuses(const std::vector<VertexCensus>& censuses, int target_index,
                               int min_degree) {
    if (censuses.empty()) throw DomainError("empty point cloud: no vertex meets the degree threshold");
    PointCloud cloud;
    cloud.target_index = target_index;
    cloud.min_degree = min_degree;
    cloud.points.reserve(censuses.size());
    for (const auto& vc : censuses) {
        CloudPoint p;
        p.vertex = vc.vertex;
        p.degree = vc.degree;
        std::tie(p.x_num, p.x_den) = vc.census.edge_density();
        std::tie(p.y_num, p.y_den) = vc.census.density(target_index);
        p.x = exact_div(p.x_num, p.x_den);
        p.y = exact_div(p.y_num, p.y_den);
        cloud.points.push_back(p);
    }
    return cloud;
}

PointCloud localized_point_cloud(const Graph& g, int target_index, int min_degree) {
    catalog_entry(target_index);  // range check
    return cloud_from_censuses(ego_censuses(g, min_degree), target_index, min_degree);
}

bool x_axis_coverage(const PointCloud& cloud, double lo, double hi) {
    if (cloud.points.empty()) throw DomainError("coverage gate on empty cloud");
    double mn = 1.0, mx = 0.0;
    for (const auto& p : cloud.points) {
        mn = std::min(mn, p.x);
        mx = std::max(mx, p.x);
    }
    return mn <= lo && mx >= hi;
}

std::string cloud_to_csv(const PointCloud& cloud) {
    std::ostringstream os;
    os << "vertex,degree,x,y\n";
    for (const auto& p : cloud.points)
        os << p.vertex << ',' << p.degree << ',' << format_double(p.x) << ',' << format_double(p.y)
           << '\n';
    return os.str();
}

std::string census_dump_csv(const std::vector<VertexCensus>& censuses) {
    std::ostringstream os;
    os << "vertex,degree";
    for (const auto& e : catalog()) os << ',' << e.slug;
    os << '\n';
    for (const auto& vc : censuses) {
        os << vc.vertex << ',' << vc.degree;
        for (int i = 0; i < kCatalogSize; ++i) os << ',' << vc.census.count(i);
        os << '\n';
    }
    return os.str();
}

}  // namespace egospread
