// Square-lattice geometry: points, boxes, self-avoiding walks and polygons,
// and the walk-class predicates shared by every counting engine.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sawbox {

struct Point {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
  Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  Point operator-(Point o) const { return {x - o.x, y - o.y}; }
};

/// Axis-aligned box measured in edges: a Box of side L has (L+1)^2 vertices.
struct Box {
  int width = 0;
  int height = 0;

  friend auto operator<=>(const Box&, const Box&) = default;
  bool contains(Point p) const {
    return p.x >= 0 && p.x <= width && p.y >= 0 && p.y <= height;
  }
  int max_dim() const { return width > height ? width : height; }
  static Box square(int side) { return {side, side}; }
};

class walk_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class containment_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An undirected self-avoiding walk of length >= 1, stored in canonical
/// orientation: the first vertex is lexicographically (x, then y) no greater
/// than the last, so each geometric walk has exactly one representation.
class Walk {
 public:
  /// Validates unit steps and self-avoidance, then canonicalizes.
  explicit Walk(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return verts_; }
  Point front() const { return verts_.front(); }
  Point back() const { return verts_.back(); }
  int length() const { return static_cast<int>(verts_.size()) - 1; }
  bool contains_vertex(Point p) const;

  /// Same walk translated by d.
  Walk translated(Point d) const;
  /// Mirror x -> -x, re-canonicalized.
  Walk reflected_x() const;
  /// Transpose (x,y) -> (y,x), re-canonicalized.
  Walk transposed() const;

  friend auto operator<=>(const Walk&, const Walk&) = default;

 private:
  std::vector<Point> verts_;
};

/// A self-avoiding polygon (cycle), length >= 4 and even, stored in canonical
/// form: lexicographically least vertex first, then the lesser of its two
/// cycle neighbours, so each undirected cycle has one representation.
class Polygon {
 public:
  explicit Polygon(std::vector<Point> cycle);

  const std::vector<Point>& vertices() const { return verts_; }
  int length() const { return static_cast<int>(verts_.size()); }

  friend auto operator<=>(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point> verts_;
};

enum class WalkClass {
  OppositeCorners,  // endpoints exactly at (0,0) and (L,L)
  OppositeSides,    // endpoints on x=0 / x=L, or on y=0 / y=L
  SpanSquare,       // spans the box; see SpanVariant
  SpanUpTo,         // spans some origin-anchored sub-square of the box
  Anywhere,         // any contained walk
  ExactBBox,        // bounding box equals the box exactly
  Cycle,            // self-avoiding polygon
};

/// Two readings of "spans the square": (a) bounding box exactly the full
/// square, (b) bounding box reaches the full side in at least one direction.
enum class SpanVariant { ExactSquareBox, MaxDimension };

inline constexpr SpanVariant kDefaultSpanVariant = SpanVariant::MaxDimension;

struct BBoxResult {
  Box box;
  Point anchor;  // lower-left corner
};

/// Smallest axis-aligned box containing all vertices, plus its lower-left corner.
BBoxResult bounding_box(const Walk& w);
BBoxResult bounding_box(std::span<const Point> vertices);

/// Membership of w in the class, relative to box b anchored at the origin.
/// Throws containment_error if a vertex of w lies outside b.
bool classify(const Walk& w, const Box& b, WalkClass cls,
              SpanVariant variant = kDefaultSpanVariant);

std::string to_string(WalkClass cls);
std::string to_string(const Walk& w);

/// Parses the names emitted by to_string(WalkClass) (kebab-case).
WalkClass walk_class_from_string(const std::string& name);

}  // namespace sawbox
