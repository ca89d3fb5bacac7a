// Boundary-line transfer-matrix enumeration of walks and cycles contained in
// an h x l rectangle.
//
// The sweep processes vertex columns left to right, one vertex (kink cell) at
// a time, bottom to top. Between columns the boundary is a line cutting h+1
// horizontal edges; each cut edge is Empty, one end of a loop (an arc of the
// walk crossing the boundary twice, encoded as a matched LowerLoopEnd /
// UpperLoopEnd pair, nested like balanced parentheses), or a FreeEnd (an arc
// whose other end is a walk endpoint already committed left of the boundary).
// Counting is over edge occupations, so each undirected walk is built exactly
// once and no direction factor appears.
//
// Unconstrained in-box counts N_{h,l} are computed first; the counts of walks
// touching all four rectangle boundaries follow by double second differences,
// and square-box totals by the position-weighted combination over sub-boxes.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sawbox/counts.hpp"

namespace sawbox {

enum class Cell : std::uint8_t {
  Empty = 0,
  LowerLoopEnd = 1,  // opening end of a boundary arc
  UpperLoopEnd = 2,  // closing end
  FreeEnd = 3,       // arc end whose partner is a committed walk endpoint
};

/// Boundary-column state between sweep columns: h+1 cells plus derived
/// bookkeeping. Signatures are packed two bits per cell into a word.
class BoundarySignature {
 public:
  BoundarySignature() = default;
  explicit BoundarySignature(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  static BoundarySignature unpack(std::uint64_t key, int n_cells);
  std::uint64_t pack() const;

  const std::vector<Cell>& cells() const { return cells_; }
  /// Loop ends nest like balanced parentheses (FreeEnds do not participate).
  bool balanced() const;
  /// Number of walk endpoints committed at or left of this boundary; equals
  /// the number of FreeEnd cells for any live sweep state.
  int free_ends_placed() const;
  /// Whether any walk occupancy has occurred.
  bool segment_started() const { return free_ends_placed() > 0 || !all_empty(); }
  bool all_empty() const;

 private:
  std::vector<Cell> cells_;
};

/// Sparse signature -> count map; an absent signature means zero.
struct StateVector {
  std::unordered_map<std::uint64_t, BigCount> entries;
};

enum class TmMode { Walks, Polygons };

class incomplete_input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// N_{h,l} and boundary-touching counts, symmetric in (h,l); stored with
/// h <= l, looked up either way.
class RectTable {
 public:
  void set_n(int h, int l, BigCount v);
  void set_a(int h, int l, BigCount v);
  const BigCount* find_n(int h, int l) const;
  const BigCount* find_a(int h, int l) const;
  /// Throws incomplete_input_error when the entry is missing.
  const BigCount& n_at(int h, int l) const;
  const BigCount& a_at(int h, int l) const;
  const std::map<std::pair<int, int>, BigCount>& n_entries() const { return n_; }
  const std::map<std::pair<int, int>, BigCount>& a_entries() const { return a_; }

 private:
  std::map<std::pair<int, int>, BigCount> n_;  // key (h, l), h <= l
  std::map<std::pair<int, int>, BigCount> a_;
};

struct TmOptions {
  int max_height = 16;
  int max_length = 64;
  /// Called with the live state vector after each completed column (tests).
  std::function<void(const StateVector&, int column)> column_observer;
};

/// One sweep of the h-strip out to width l_max; returns N_{h,l} for l = 0..l_max
/// (walks of length >= 1, or cycles, wholly inside the h x l box).
std::vector<BigCount> tm_inbox_row(int h, int l_max, TmMode mode, const TmOptions& opts = {});

/// Exact number of walks contained in the h x l box, endpoints anywhere.
BigCount tm_inbox_count(int h, int l, const TmOptions& opts = {});

/// Exact number of cycles contained in the h x l box.
BigCount tm_polygon_count(int h, int l, const TmOptions& opts = {});

/// Boundary-touching count via double second differences of the N table:
/// inverts N_{h,l} = sum_{a<=h,b<=l} (h-a+1)(l-b+1) A^_{a,b}.
/// Requires N on the 3x3 stencil below (h,l); missing entries at negative
/// indices contribute zero. Throws logic_error on a negative result.
BigCount exact_bbox_count(int h, int l, const RectTable& table);

/// Square-box total from boundary-touching counts:
/// A_L = sum_{l=1..L} (L-l+1)^2 A^_{l,l}
///     + 2 sum_{h=0..L-1} sum_{l=h+1..L} (L-l+1)(L-h+1) A^_{h,l}.
BigCount assemble_square_total(int side, const RectTable& table);

/// Fills N and A^ for all 0 <= h <= l <= l_max.
RectTable build_rect_table(int l_max, TmMode mode, const TmOptions& opts = {},
                           const std::function<void(int h)>& progress = {});

}  // namespace sawbox
