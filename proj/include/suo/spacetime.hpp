#pragma once

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "suo/graph.hpp"
#include "suo/path.hpp"

namespace suo {

// Vertex and swap reservations of already planned robots.
class ReservationTable {
 public:
  // Reserves positions 0..last_time of the path (holding its last vertex). With
  // rest_forever the final vertex stays blocked for every later time step.
  void reserve(const Path& path, int last_time, bool rest_forever);
  void clear();

  bool vertex_free(VertexId v, int t) const;
  // Moving from -> to, arriving at t: target vertex free and no opposing move.
  bool move_free(VertexId from, VertexId to, int t) const;
  // True when nothing occupies v at any time >= t.
  bool can_hold(VertexId v, int t) const;
  int max_time() const { return max_time_; }

 private:
  static std::uint64_t key(VertexId v, int t) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t)) << 32) | static_cast<std::uint32_t>(v.index);
  }
  struct MoveKey {
    std::int32_t from;
    std::int32_t to;
    std::int32_t t;
    friend bool operator==(const MoveKey&, const MoveKey&) = default;
  };
  struct MoveKeyHash {
    std::size_t operator()(const MoveKey& k) const noexcept;
  };

  std::unordered_set<std::uint64_t> vertices_;
  std::unordered_set<MoveKey, MoveKeyHash> moves_;
  std::unordered_map<std::int32_t, int> last_use_;
  std::unordered_map<std::int32_t, int> rest_from_;
  int max_time_ = 0;
};

struct SpaceTimeQuery {
  VertexId start;
  // Visited in order; the robot ends holding the last one. Empty means "stay".
  std::vector<VertexId> targets;
  // Reservations are honoured for t <= window only; beyond it the search is a
  // plain shortest-path completion over (vertex, next target) states.
  int window = std::numeric_limits<int>::max();
  // No state later than this is generated inside the window.
  int time_limit = std::numeric_limits<int>::max();
  std::uint64_t seed = 0;
};

struct SpaceTimeResult {
  Path path;
  bool found = false;
  std::int64_t expanded = 0;
};

// Space-time A* honouring reservations, with wait moves and chained targets.
SpaceTimeResult plan_space_time(const GridMap& map, DistanceOracle& distances, const ReservationTable& reservations,
                                const SpaceTimeQuery& query);

}  // namespace suo
