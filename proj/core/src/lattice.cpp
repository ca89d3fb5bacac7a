#include "sawbox/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sawbox {

namespace {

bool unit_step(Point a, Point b) {
  int dx = a.x - b.x, dy = a.y - b.y;
  return (dx == 0 && (dy == 1 || dy == -1)) || (dy == 0 && (dx == 1 || dx == -1));
}

}  // namespace

Walk::Walk(std::vector<Point> vertices) : verts_(std::move(vertices)) {
  if (verts_.size() < 2) {
    throw walk_error("walk needs at least one step");
  }
  std::set<Point> seen;
  for (size_t i = 0; i < verts_.size(); ++i) {
    if (!seen.insert(verts_[i]).second) {
      throw walk_error("walk revisits a vertex");
    }
    if (i > 0 && !unit_step(verts_[i - 1], verts_[i])) {
      throw walk_error("walk step is not a unit step");
    }
  }
  if (verts_.back() < verts_.front()) {
    std::reverse(verts_.begin(), verts_.end());
  }
}

bool Walk::contains_vertex(Point p) const {
  return std::find(verts_.begin(), verts_.end(), p) != verts_.end();
}

Walk Walk::translated(Point d) const {
  std::vector<Point> v = verts_;
  for (auto& p : v) p = p + d;
  return Walk(std::move(v));
}

Walk Walk::reflected_x() const {
  std::vector<Point> v = verts_;
  for (auto& p : v) p.x = -p.x;
  return Walk(std::move(v));
}

Walk Walk::transposed() const {
  std::vector<Point> v = verts_;
  for (auto& p : v) std::swap(p.x, p.y);
  return Walk(std::move(v));
}

Polygon::Polygon(std::vector<Point> cycle) : verts_(std::move(cycle)) {
  if (verts_.size() < 4 || verts_.size() % 2 != 0) {
    throw walk_error("polygon length must be even and >= 4");
  }
  std::set<Point> seen;
  for (size_t i = 0; i < verts_.size(); ++i) {
    if (!seen.insert(verts_[i]).second) {
      throw walk_error("polygon revisits a vertex");
    }
    if (!unit_step(verts_[i], verts_[(i + 1) % verts_.size()])) {
      throw walk_error("polygon step is not a unit step");
    }
  }
  // Canonical form: rotate the least vertex to the front, then orient toward
  // its lesser neighbour.
  auto least = std::min_element(verts_.begin(), verts_.end());
  std::rotate(verts_.begin(), least, verts_.end());
  if (verts_[verts_.size() - 1] < verts_[1]) {
    std::reverse(verts_.begin() + 1, verts_.end());
  }
}

BBoxResult bounding_box(std::span<const Point> vertices) {
  int x0 = vertices[0].x, x1 = vertices[0].x;
  int y0 = vertices[0].y, y1 = vertices[0].y;
  for (Point p : vertices) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  return {Box{x1 - x0, y1 - y0}, Point{x0, y0}};
}

BBoxResult bounding_box(const Walk& w) { return bounding_box(std::span(w.vertices())); }

namespace {

bool spans_anchored(const BBoxResult& bb, const Box& b, SpanVariant variant) {
  // Whether the walk spans box b (anchored at origin) per the chosen reading.
  if (variant == SpanVariant::ExactSquareBox) {
    return bb.anchor == Point{0, 0} && bb.box == b;
  }
  // MaxDimension: reaches the full width or the full height of b.
  return (bb.box.width == b.width && bb.anchor.x == 0) ||
         (bb.box.height == b.height && bb.anchor.y == 0);
}

}  // namespace

bool classify(const Walk& w, const Box& b, WalkClass cls, SpanVariant variant) {
  for (Point p : w.vertices()) {
    if (!b.contains(p)) {
      throw containment_error("walk vertex outside the box");
    }
  }
  const Point e1 = w.front(), e2 = w.back();
  switch (cls) {
    case WalkClass::Anywhere:
      return true;
    case WalkClass::OppositeCorners: {
      const Point a{0, 0}, c{b.width, b.height};
      return (e1 == a && e2 == c) || (e1 == c && e2 == a);
    }
    case WalkClass::OppositeSides: {
      auto lr = [&](Point u, Point v) { return u.x == 0 && v.x == b.width; };
      auto bt = [&](Point u, Point v) { return u.y == 0 && v.y == b.height; };
      return lr(e1, e2) || lr(e2, e1) || bt(e1, e2) || bt(e2, e1);
    }
    case WalkClass::SpanSquare:
      return spans_anchored(bounding_box(w), b, variant);
    case WalkClass::SpanUpTo: {
      // Member of the union of the sets spanning the anchored l-sub-square,
      // l = 0..side. The walk's own max bounding dimension fixes l.
      const auto bb = bounding_box(w);
      const int l = bb.box.max_dim();
      if (l > b.max_dim()) return false;
      return spans_anchored(bb, Box{l, l}, variant) &&
             bb.anchor.x + bb.box.width <= l && bb.anchor.y + bb.box.height <= l;
    }
    case WalkClass::ExactBBox: {
      const auto bb = bounding_box(w);
      return bb.anchor == Point{0, 0} && bb.box == b;
    }
    case WalkClass::Cycle:
      return false;  // a Walk is never a cycle
  }
  throw std::logic_error("unreachable walk class");
}

std::string to_string(WalkClass cls) {
  switch (cls) {
    case WalkClass::OppositeCorners: return "opposite-corners";
    case WalkClass::OppositeSides: return "opposite-sides";
    case WalkClass::SpanSquare: return "span-square";
    case WalkClass::SpanUpTo: return "span-up-to";
    case WalkClass::Anywhere: return "anywhere";
    case WalkClass::ExactBBox: return "exact-bbox";
    case WalkClass::Cycle: return "cycles";
  }
  return "?";
}

WalkClass walk_class_from_string(const std::string& name) {
  for (WalkClass c : {WalkClass::OppositeCorners, WalkClass::OppositeSides,
                      WalkClass::SpanSquare, WalkClass::SpanUpTo, WalkClass::Anywhere,
                      WalkClass::ExactBBox, WalkClass::Cycle}) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown walk class: " + name);
}

std::string to_string(const Walk& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.vertices().size(); ++i) {
    if (i) os << "-";
    os << "(" << w.vertices()[i].x << "," << w.vertices()[i].y << ")";
  }
  return os.str();
}

}  // namespace sawbox
