// Brute-force depth-first enumeration of walks and polygons in small boxes:
// the ground-truth oracle the faster engines are checked against.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sawbox/counts.hpp"
#include "sawbox/lattice.hpp"

namespace sawbox {

struct OracleLimits {
  int max_side_anywhere = 5;
  int max_side_restricted = 6;
  std::uint64_t visit_budget = 1'000'000'000;  // DFS node cap
};

/// Exact number of canonical walks (length >= 1) in b satisfying the class.
/// Deterministic; throws resource_limit_error past the configured caps.
BigCount oracle_count(WalkClass cls, const Box& b,
                      SpanVariant variant = kDefaultSpanVariant,
                      const OracleLimits& limits = {});

/// Exact number of distinct cycles contained in b.
BigCount oracle_count_polygons(const Box& b, const OracleLimits& limits = {});

struct SpanningCounts {
  std::vector<BigCount> m;  // M_l for l = 0..L, with M_0 = 1 by convention
  BigCount m_hat;           // sum of the above
};

/// M_l for l = 0..L and their sum M-hat_L.
SpanningCounts oracle_spanning_counts(int side, SpanVariant variant = kDefaultSpanVariant,
                                      const OracleLimits& limits = {});

/// Invokes fn once per canonical walk contained in b. The workhorse behind
/// oracle_count and the exhaustive proof-construction tests.
void for_each_walk(const Box& b, const std::function<void(const Walk&)>& fn,
                   const OracleLimits& limits = {});

/// Invokes fn once per distinct cycle contained in b.
void for_each_cycle(const Box& b, const std::function<void(const Polygon&)>& fn,
                    const OracleLimits& limits = {});

}  // namespace sawbox
