#include "sawbox/oracle.hpp"

#include <array>

namespace sawbox {

namespace {

// Fixed-capacity DFS state over a (w+1) x (h+1) vertex grid. The enumeration
// grows directed walks from every start vertex and counts a prefix exactly
// when start < end lexicographically, so each undirected walk is counted once.
struct Dfs {
  int w, h;
  std::uint64_t budget;
  std::uint64_t visited = 0;
  std::array<bool, 65 * 65> used{};
  std::vector<Point> path;

  Dfs(const Box& b, std::uint64_t budget_) : w(b.width), h(b.height), budget(budget_) {
    path.reserve(static_cast<size_t>((w + 1) * (h + 1)));
  }

  int idx(Point p) const { return p.x * (h + 1) + p.y; }

  void tick() {
    if (++visited > budget) {
      throw resource_limit_error("oracle visit budget exceeded");
    }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    for (int x = 0; x <= w; ++x) {
      for (int y = 0; y <= h; ++y) {
        Point s{x, y};
        path.push_back(s);
        used[idx(s)] = true;
        extend(visit);
        used[idx(s)] = false;
        path.pop_back();
      }
    }
  }

  template <typename Visit>
  void extend(Visit& visit) {
    tick();
    if (path.size() >= 2 && path.front() < path.back()) {
      visit(path);
    }
    const Point cur = path.back();
    const std::array<Point, 4> steps{Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}};
    for (Point d : steps) {
      Point nxt = cur + d;
      if (nxt.x < 0 || nxt.x > w || nxt.y < 0 || nxt.y > h) continue;
      if (used[idx(nxt)]) continue;
      used[idx(nxt)] = true;
      path.push_back(nxt);
      extend(visit);
      path.pop_back();
      used[idx(nxt)] = false;
    }
  }
};

bool class_member(std::span<const Point> path, const Box& b, WalkClass cls,
                  SpanVariant variant) {
  const Point e1 = path.front(), e2 = path.back();
  switch (cls) {
    case WalkClass::Anywhere:
      return true;
    case WalkClass::OppositeCorners: {
      const Point a{0, 0}, c{b.width, b.height};
      return (e1 == a && e2 == c) || (e1 == c && e2 == a);
    }
    case WalkClass::OppositeSides:
      return (e1.x == 0 && e2.x == b.width) || (e2.x == 0 && e1.x == b.width) ||
             (e1.y == 0 && e2.y == b.height) || (e2.y == 0 && e1.y == b.height);
    default:
      break;
  }
  const auto bb = bounding_box(path);
  switch (cls) {
    case WalkClass::ExactBBox:
      return bb.anchor == Point{0, 0} && bb.box == b;
    case WalkClass::SpanSquare:
      if (variant == SpanVariant::ExactSquareBox) {
        return bb.anchor == Point{0, 0} && bb.box == b;
      }
      return (bb.box.width == b.width && bb.anchor.x == 0) ||
             (bb.box.height == b.height && bb.anchor.y == 0);
    case WalkClass::SpanUpTo: {
      const int l = bb.box.max_dim();
      if (l > b.max_dim()) return false;
      if (bb.anchor.x + bb.box.width > l || bb.anchor.y + bb.box.height > l) return false;
      if (variant == SpanVariant::ExactSquareBox) {
        return bb.anchor == Point{0, 0} && bb.box == Box{l, l};
      }
      return (bb.box.width == l && bb.anchor.x == 0) ||
             (bb.box.height == l && bb.anchor.y == 0);
    }
    default:
      throw std::logic_error("unhandled walk class");
  }
}

void check_limits(WalkClass cls, const Box& b, const OracleLimits& limits) {
  const int cap = (cls == WalkClass::OppositeCorners || cls == WalkClass::OppositeSides)
                      ? limits.max_side_restricted
                      : limits.max_side_anywhere;
  if (b.max_dim() > cap) {
    throw resource_limit_error("oracle box side " + std::to_string(b.max_dim()) +
                               " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

BigCount oracle_count(WalkClass cls, const Box& b, SpanVariant variant,
                      const OracleLimits& limits) {
  if (cls == WalkClass::Cycle) {
    return oracle_count_polygons(b, limits);
  }
  check_limits(cls, b, limits);
  BigCount total = 0;
  Dfs dfs(b, limits.visit_budget);
  dfs.run([&](std::span<const Point> path) {
    if (class_member(path, b, cls, variant)) ++total;
  });
  return total;
}

BigCount oracle_count_polygons(const Box& b, const OracleLimits& limits) {
  check_limits(WalkClass::Cycle, b, limits);
  BigCount total = 0;
  for_each_cycle(b, [&](const Polygon&) { ++total; }, limits);
  return total;
}

SpanningCounts oracle_spanning_counts(int side, SpanVariant variant,
                                      const OracleLimits& limits) {
  SpanningCounts out;
  out.m.push_back(1);  // M_0 = 1 by convention
  for (int l = 1; l <= side; ++l) {
    out.m.push_back(oracle_count(WalkClass::SpanSquare, Box::square(l), variant, limits));
  }
  out.m_hat = 0;
  for (const auto& v : out.m) out.m_hat += v;
  return out;
}

void for_each_walk(const Box& b, const std::function<void(const Walk&)>& fn,
                   const OracleLimits& limits) {
  Dfs dfs(b, limits.visit_budget);
  dfs.run([&](std::span<const Point> path) {
    fn(Walk(std::vector<Point>(path.begin(), path.end())));
  });
}

void for_each_cycle(const Box& b, const std::function<void(const Polygon&)>& fn,
                    const OracleLimits& limits) {
  if (b.width < 1 || b.height < 1) return;  // no cycle fits in a degenerate box
  const int w = b.width, h = b.height;
  std::array<bool, 65 * 65> used{};
  std::vector<Point> path;
  std::uint64_t visited = 0;
  auto idx = [&](Point p) { return p.x * (h + 1) + p.y; };
  const std::array<Point, 4> steps{Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}};

  // Each cycle is visited once: the start is its lexicographically least
  // vertex and the second vertex is less than the last.
  std::function<void(Point)> grow = [&](Point s) {
    if (++visited > limits.visit_budget) {
      throw resource_limit_error("oracle visit budget exceeded");
    }
    const Point cur = path.back();
    for (Point d : steps) {
      Point nxt = cur + d;
      if (!b.contains(nxt)) continue;
      if (nxt == s && path.size() >= 4) {
        if (path[1] < path.back()) {
          fn(Polygon(path));
        }
        continue;
      }
      if (used[idx(nxt)] || nxt < s) continue;
      used[idx(nxt)] = true;
      path.push_back(nxt);
      grow(s);
      path.pop_back();
      used[idx(nxt)] = false;
    }
  };

  for (int x = 0; x <= w; ++x) {
    for (int y = 0; y <= h; ++y) {
      Point s{x, y};
      path.assign(1, s);
      used[idx(s)] = true;
      grow(s);
      used[idx(s)] = false;
    }
  }
}

}  // namespace sawbox
