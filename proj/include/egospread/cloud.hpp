#pragma once

#include <optional>
#include <string>
#include <vector>

#include "egospread/census.hpp"
#include "egospread/graph.hpp"

namespace egospread {

struct CloudPoint {
    int vertex = 0;
    int degree = 0;
    // Exact rationals; the doubles are their correctly rounded projections.
    i64 x_num = 0, x_den = 1;
    i64 y_num = 0, y_den = 1;
    double x = 0.0, y = 0.0;
};

struct PointCloud {
    int target_index = 0;  // catalog index of H
    int min_degree = 0;
    std::vector<CloudPoint> points;  // ascending vertex id
};

struct VertexCensus {
    int vertex = 0;
    int degree = 0;
    MotifCensus census;
};

// One census per qualifying vertex (deg >= min_degree), ascending vertex id.
// Egos are independent, so the pass is data-parallel; the merge is keyed by
// vertex id and the output is identical for any worker count.
std::vector<VertexCensus> ego_censuses(const Graph& g, int min_degree, int workers = 0);

// Project one census pass onto a target; all 15 clouds share the same pass.
PointCloud cloud_from_censuses(const std::vector<VertexCensus>& censuses, int target_index,
                               int min_degree);

// Convenience wrapper: full pass + projection. Throws DomainError when no
// vertex qualifies.
PointCloud localized_point_cloud(const Graph& g, int target_index, int min_degree = 10);

// Admission gate: the unpruned cloud must span the x-axis.
bool x_axis_coverage(const PointCloud& cloud, double lo = 0.05, double hi = 0.95);

// CSV with header vertex,degree,x,y and 17-significant-digit floats.
std::string cloud_to_csv(const PointCloud& cloud);

// One row per vertex: vertex, degree, then the 15 counts in catalog order.
std::string census_dump_csv(const std::vector<VertexCensus>& censuses);

}  // namespace egospread
