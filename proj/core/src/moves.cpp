#include "sawbox/moves.hpp"

#include <algorithm>
#include <map>

namespace sawbox {

namespace {

// Directed copy of the walk with `endpoint` last.
std::vector<Point> oriented_to(const Walk& w, Point endpoint) {
  std::vector<Point> v = w.vertices();
  if (v.front() == endpoint) {
    std::reverse(v.begin(), v.end());
  } else if (v.back() != endpoint) {
    throw walk_error("point is not an endpoint of the walk");
  }
  return v;
}

using Edge = std::pair<Point, Point>;

Edge mk_edge(Point a, Point b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::set<Edge> edge_set(const std::vector<Point>& path) {
  std::set<Edge> es;
  for (size_t i = 0; i + 1 < path.size(); ++i) es.insert(mk_edge(path[i], path[i + 1]));
  return es;
}

// Rebuilds a walk from an edge set; throws walk_error unless the edges form a
// single simple path.
Walk walk_from_edges(const std::set<Edge>& es) {
  std::map<Point, std::vector<Point>> adj;
  for (const auto& [a, b] : es) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<Point> ends;
  for (const auto& [p, ns] : adj) {
    if (ns.size() > 2) throw walk_error("vertex of degree > 2");
    if (ns.size() == 1) ends.push_back(p);
  }
  if (ends.size() != 2) throw walk_error("edge set is not a path");
  std::vector<Point> path{std::min(ends[0], ends[1])};
  Point prev = path[0], cur = adj[prev][0];
  path.push_back(cur);
  while (adj[cur].size() == 2) {
    Point nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
    path.push_back(cur);
  }
  if (path.size() != adj.size()) throw walk_error("edge set is disconnected");
  return Walk(std::move(path));
}

// The far edge of the right neighbour that a join move cuts: the edge from r
// toward the moved endpoint's side of the walk. Returns (cut edge partner,
// kind).
std::pair<Point, MoveKind> join_cut(const std::vector<Point>& dir, Point r) {
  // dir runs v0 .. vn = endpoint e; r sits at some interior index k.
  auto it = std::find(dir.begin(), dir.end(), r);
  if (it == dir.end() || it == dir.begin() || it + 1 == dir.end()) {
    throw walk_error("right neighbour is not interior to the walk");
  }
  const Point after = *(it + 1);  // e-side neighbour: the edge (r, after) closes the cycle
  const Point d = after - r;
  MoveKind kind;
  if (d == Point{1, 0}) {
    kind = MoveKind::EndAttack;
  } else if (d == Point{0, 1}) {
    kind = MoveKind::BackbiteUp;
  } else if (d == Point{0, -1}) {
    kind = MoveKind::BackbiteDown;
  } else {
    throw walk_error("unexpected join geometry");  // would move the endpoint left
  }
  return {after, kind};
}

}  // namespace

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::Lengthen: return "lengthen";
    case MoveKind::Shorten: return "shorten";
    case MoveKind::EndAttack: return "end-attack";
    case MoveKind::BackbiteUp: return "backbite-up";
    case MoveKind::BackbiteDown: return "backbite-down";
  }
  return "?";
}

std::optional<MoveKind> select_move(const Walk& w, Point endpoint, const Box& b) {
  const auto dir = oriented_to(w, endpoint);
  if (endpoint.x >= b.width) return std::nullopt;  // already on the right boundary
  const Point r = endpoint + Point{1, 0};
  const bool r_occupied = w.contains_vertex(r);
  const bool edge_occupied = dir[dir.size() - 2] == r;
  if (edge_occupied) return MoveKind::Shorten;
  if (!r_occupied) return MoveKind::Lengthen;
  return join_cut(dir, r).second;
}

MoveResult apply_move(const Walk& w, Point endpoint, MoveKind m, const Box& b) {
  const auto selected = select_move(w, endpoint, b);
  if (!selected || *selected != m) {
    throw walk_error("move does not match the selected move for this endpoint");
  }
  auto dir = oriented_to(w, endpoint);
  const Point r = endpoint + Point{1, 0};
  switch (m) {
    case MoveKind::Lengthen: {
      dir.push_back(r);
      return {Walk(std::move(dir)), r};
    }
    case MoveKind::Shorten: {
      dir.pop_back();
      if (dir.size() < 2) throw walk_error("shorten would erase the walk");
      return {Walk(std::move(dir)), r};
    }
    case MoveKind::EndAttack:
    case MoveKind::BackbiteUp:
    case MoveKind::BackbiteDown: {
      const auto [cut_to, kind] = join_cut(dir, r);
      (void)kind;
      auto es = edge_set(dir);
      es.erase(mk_edge(r, cut_to));
      es.insert(mk_edge(endpoint, r));
      return {walk_from_edges(es), cut_to};
    }
  }
  throw std::logic_error("unreachable move kind");
}

PushResult push_to_sides(const Walk& w, const Box& b, SpanVariant variant) {
  if (b.width != b.height) throw walk_error("push_to_sides needs a square box");
  const int side = b.width;
  if (!classify(w, b, WalkClass::SpanSquare, variant)) {
    throw walk_error("walk does not span the square");
  }
  const auto bb = bounding_box(w);
  const bool spans_lr = bb.box.width == side && bb.anchor.x == 0;
  if (!spans_lr) {
    // spans bottom-top only: run the transposed procedure
    auto res = push_to_sides(w.transposed(), b, variant);
    for (auto& s : res.trace.steps) {
      std::swap(s.endpoint_before.x, s.endpoint_before.y);
      std::swap(s.endpoint_after.x, s.endpoint_after.y);
    }
    return {res.walk.transposed(), std::move(res.trace)};
  }

  auto rightmost = [](Point a, Point b2) {
    // larger column wins; same column: the uppermost counts as rightmost
    if (a.x != b2.x) return a.x > b2.x ? a : b2;
    return a.y > b2.y ? a : b2;
  };

  Walk cur = w;
  MoveTrace trace;
  // Move the rightmost endpoint to x = side.
  {
    Point e = rightmost(cur.front(), cur.back());
    while (e.x < side) {
      const MoveKind kind = *select_move(cur, e, b);
      auto res = apply_move(cur, e, kind, b);
      trace.steps.push_back({kind, e, res.endpoint, res.endpoint.x - e.x});
      cur = std::move(res.walk);
      e = res.endpoint;
    }
  }
  // Mirror the walk and do the same for the (reflected) leftmost endpoint.
  {
    Walk mir = cur.reflected_x().translated({side, 0});
    Point e = rightmost(mir.front(), mir.back());
    while (e.x < side) {
      const MoveKind kind = *select_move(mir, e, b);
      auto res = apply_move(mir, e, kind, b);
      trace.steps.push_back({kind,
                             {side - e.x, e.y},
                             {side - res.endpoint.x, res.endpoint.y},
                             res.endpoint.x - e.x});
      mir = std::move(res.walk);
      e = res.endpoint;
    }
    cur = mir.reflected_x().translated({side, 0});
  }
  return {std::move(cur), std::move(trace)};
}

Walk extend_spanning_walk(const Walk& w, SpanVariant variant) {
  const auto bb = bounding_box(w);
  const int l = bb.box.max_dim();
  if (!classify(w, Box::square(l), WalkClass::SpanSquare, variant)) {
    throw walk_error("walk does not span its square");
  }
  const bool spans_lr = bb.box.width == l && bb.anchor.x == 0;
  if (spans_lr) {
    // First boundary site on the left side, clockwise from the bottom-left
    // corner, i.e. scanning upward.
    for (int y = 0; y <= l; ++y) {
      const Point s{0, y};
      if (!w.contains_vertex(s)) continue;
      if (s == w.front() || s == w.back()) {
        auto dir = oriented_to(w, s);
        dir.push_back({-1, y});
        return Walk(std::move(dir)).translated({1, 0});
      }
      // Interior: the boundary step runs upward (the site below is not on the
      // walk, else it would have been found first).
      auto es = edge_set(w.vertices());
      const Point up{0, y + 1};
      if (!es.count(mk_edge(s, up))) throw walk_error("expected boundary step upward");
      es.erase(mk_edge(s, up));
      es.insert(mk_edge(s, {-1, y}));
      es.insert(mk_edge({-1, y}, {-1, y + 1}));
      es.insert(mk_edge({-1, y + 1}, up));
      return walk_from_edges(es).translated({1, 0});
    }
  } else {
    // Spans bottom-top only: first boundary site along the bottom, clockwise
    // from the bottom-right corner, i.e. scanning leftward.
    for (int x = l; x >= 0; --x) {
      const Point s{x, 0};
      if (!w.contains_vertex(s)) continue;
      if (s == w.front() || s == w.back()) {
        auto dir = oriented_to(w, s);
        dir.push_back({x, -1});
        return Walk(std::move(dir)).translated({0, 1});
      }
      auto es = edge_set(w.vertices());
      const Point left{x - 1, 0};
      if (!es.count(mk_edge(s, left))) throw walk_error("expected boundary step leftward");
      es.erase(mk_edge(s, left));
      es.insert(mk_edge(s, {x, -1}));
      es.insert(mk_edge({x, -1}, {x - 1, -1}));
      es.insert(mk_edge({x - 1, -1}, left));
      return walk_from_edges(es).translated({0, 1});
    }
  }
  throw std::logic_error("spanning walk has no boundary site");
}

std::set<Walk> antecedents(const Walk& w, Point endpoint, const Box& b) {
  std::set<Walk> out;
  const auto dir = oriented_to(w, endpoint);

  auto verify = [&](const Walk& v, Point v_end) {
    try {
      const auto kind = select_move(v, v_end, b);
      if (!kind) return;
      auto res = apply_move(v, v_end, *kind, b);
      if (res.walk == w && res.endpoint == endpoint) out.insert(v);
    } catch (const walk_error&) {
      // candidate does not admit the move; not an antecedent
    }
  };

  // Lengthen preimage: drop the endpoint.
  if (dir.size() >= 3) {
    const Point old_end = dir[dir.size() - 2];
    verify(Walk(std::vector<Point>(dir.begin(), dir.end() - 1)), old_end);
  }
  // Shorten preimage: prepend the left neighbour as the old endpoint.
  {
    const Point q = endpoint + Point{-1, 0};
    if (b.contains(q) && !w.contains_vertex(q)) {
      auto es = edge_set(dir);
      es.insert(mk_edge(q, endpoint));
      try {
        verify(walk_from_edges(es), q);
      } catch (const walk_error&) {
      }
    }
  }
  // Join preimages: re-add a cut edge (r, endpoint) and remove the joining
  // step (e_v, r) for each occupied neighbour r of the endpoint.
  for (const Point d : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) {
    const Point r = endpoint + d;
    if (!w.contains_vertex(r)) continue;
    auto es0 = edge_set(dir);
    if (es0.count(mk_edge(r, endpoint))) continue;  // edge present: nothing was cut here
    const Point e_v = r + Point{-1, 0};
    if (!b.contains(e_v) || !w.contains_vertex(e_v)) continue;
    if (!es0.count(mk_edge(e_v, r))) continue;
    es0.erase(mk_edge(e_v, r));
    es0.insert(mk_edge(r, endpoint));
    try {
      verify(walk_from_edges(es0), e_v);
    } catch (const walk_error&) {
    }
  }
  return out;
}

}  // namespace sawbox
