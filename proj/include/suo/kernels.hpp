#pragma once

// Data-parallel kernels behind the metrics, the validator and batch distance
// fields. Each kernel has an OpenMP version and a plain serial reference; the
// two are checked against each other in tests and compared in suo_bench.

#include <cstdint>
#include <span>
#include <vector>

#include "suo/graph.hpp"
#include "suo/metrics.hpp"
#include "suo/path.hpp"

namespace suo::kernels {

namespace serial {

// Pairwise scan over all robot pairs and time steps. Sorted output.
std::vector<Conflict> find_conflicts(std::span<const Path> paths);
// Pairwise image intersections.
std::int64_t path_overlap_total(std::span<const Path> paths);
std::vector<DistanceField> distance_fields(const GridMap& map, std::span<const VertexId> goals);

}  // namespace serial

namespace parallel {

// Per-time-step bucketing, time steps split across threads. Sorted output.
std::vector<Conflict> find_conflicts(std::span<const Path> paths);
// sum over v of m_v (m_v - 1), m_v = number of images containing v.
std::int64_t path_overlap_total(std::span<const Path> paths);
std::vector<DistanceField> distance_fields(const GridMap& map, std::span<const VertexId> goals);

}  // namespace parallel

// Threads used by the parallel kernels and CLI seed batches. Reads SUO_WORKERS once.
int worker_count();
void set_worker_count(int n);

}  // namespace suo::kernels
