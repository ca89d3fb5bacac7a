#include "sawbox/transfer.hpp"

#include <bit>


namespace sawbox {

namespace {

constexpr std::uint64_t kCellMask = 3;

inline Cell cell_at(std::uint64_t key, int i) {
  return static_cast<Cell>((key >> (2 * i)) & kCellMask);
}

inline std::uint64_t with_cell(std::uint64_t key, int i, Cell c) {
  key &= ~(kCellMask << (2 * i));
  key |= static_cast<std::uint64_t>(c) << (2 * i);
  return key;
}

inline int free_end_count(std::uint64_t key) {
  // FreeEnd = 0b11: count positions where both bits are set.
  constexpr std::uint64_t lo = 0x5555555555555555ULL;
  return std::popcount(key & (key >> 1) & lo);
}

// Matching partner of the LowerLoopEnd at slot pos, scanning upward.
// FreeEnds do not participate in the nesting.
int partner_above(std::uint64_t key, int pos, int n_cells) {
  int depth = 0;
  for (int i = pos + 1; i < n_cells; ++i) {
    Cell c = cell_at(key, i);
    if (c == Cell::LowerLoopEnd) {
      ++depth;
    } else if (c == Cell::UpperLoopEnd) {
      if (depth == 0) return i;
      --depth;
    }
  }
  throw std::logic_error("boundary signature unbalanced: no partner above");
}

// Matching partner of the UpperLoopEnd at slot pos, scanning downward.
int partner_below(std::uint64_t key, int pos) {
  int depth = 0;
  for (int i = pos - 1; i >= 0; --i) {
    Cell c = cell_at(key, i);
    if (c == Cell::UpperLoopEnd) {
      ++depth;
    } else if (c == Cell::LowerLoopEnd) {
      if (depth == 0) return i;
      --depth;
    }
  }
  throw std::logic_error("boundary signature unbalanced: no partner below");
}

using Map = std::unordered_map<std::uint64_t, BigCount>;

// Processes the kink cell at row y of the current column. Slot y holds the
// lower (vertical) input edge, slot y+1 the left (horizontal) input edge; the
// same two slots receive the right and upper output edges. top_row forbids an
// occupied upper output.
void process_cell(const Map& cur, Map& next, BigCount& completed, int y, int n_cells,
                  bool top_row, TmMode mode) {
  const bool walks = (mode == TmMode::Walks);
  const int i = y, j = y + 1;
  for (const auto& [key, cnt] : cur) {
    const Cell d = cell_at(key, i);  // vertical edge below the vertex
    const Cell lft = cell_at(key, j);  // horizontal edge to the left
    const std::uint64_t base = with_cell(with_cell(key, i, Cell::Empty), j, Cell::Empty);
    auto emit = [&](std::uint64_t k) { next[k] += cnt; };

    if (d == Cell::Empty && lft == Cell::Empty) {
      emit(base);  // vertex unoccupied
      if (!top_row) {
        // new arc through both output edges
        emit(with_cell(with_cell(base, i, Cell::LowerLoopEnd), j, Cell::UpperLoopEnd));
      }
      if (walks && free_end_count(base) < 2) {
        // new segment with an endpoint at this vertex
        emit(with_cell(base, i, Cell::FreeEnd));
        if (!top_row) emit(with_cell(base, j, Cell::FreeEnd));
      }
      continue;
    }

    if (d == Cell::Empty || lft == Cell::Empty) {
      // one incoming arc end: continue it right or up, or terminate it
      const Cell x = (d == Cell::Empty) ? lft : d;
      const int from = (d == Cell::Empty) ? j : i;
      emit(with_cell(base, i, x));                    // straight on / turn right
      if (!top_row) emit(with_cell(base, j, x));      // turn up / straight up
      if (walks) {
        // terminate: commit a walk endpoint at this vertex
        if (x == Cell::FreeEnd) {
          if (base == 0) completed += cnt;  // second endpoint placed: walk done
        } else if (free_end_count(base) < 2) {
          const int p = (x == Cell::LowerLoopEnd) ? partner_above(key, from, n_cells)
                                                  : partner_below(key, from);
          emit(with_cell(base, p, Cell::FreeEnd));
        }
      }
      continue;
    }

    // Both input edges occupied: the arcs join at this vertex, outputs empty.
    if (d == Cell::FreeEnd && lft == Cell::FreeEnd) {
      if (base == 0) completed += cnt;  // the two open segments fuse: walk done
    } else if (d == Cell::FreeEnd || lft == Cell::FreeEnd) {
      // free end joins a loop end: the loop's partner inherits the free end
      const int loop_slot = (d == Cell::FreeEnd) ? j : i;
      const Cell loop = cell_at(key, loop_slot);
      const int p = (loop == Cell::LowerLoopEnd) ? partner_above(key, loop_slot, n_cells)
                                                 : partner_below(key, loop_slot);
      emit(with_cell(base, p, Cell::FreeEnd));
    } else if (d == Cell::LowerLoopEnd && lft == Cell::UpperLoopEnd) {
      // adjacent matched pair: joining would close a loop
      if (mode == TmMode::Polygons && base == 0) completed += cnt;
      // walks: discard (a closed loop is not a walk)
    } else if (d == Cell::UpperLoopEnd && lft == Cell::LowerLoopEnd) {
      emit(base);  // two arcs merge; their far ends pair up positionally
    } else if (d == Cell::LowerLoopEnd && lft == Cell::LowerLoopEnd) {
      // both open upward; the inner partner (of slot j) flips to a lower end
      const int p = partner_above(key, j, n_cells);
      emit(with_cell(base, p, Cell::LowerLoopEnd));
    } else {  // UpperLoopEnd, UpperLoopEnd
      // both close downward; the inner partner (of slot i) flips to an upper end
      const int p = partner_below(key, i);
      emit(with_cell(base, p, Cell::UpperLoopEnd));
    }
  }
}

}  // namespace

BoundarySignature BoundarySignature::unpack(std::uint64_t key, int n_cells) {
  std::vector<Cell> cells(n_cells);
  for (int i = 0; i < n_cells; ++i) cells[i] = cell_at(key, i);
  return BoundarySignature(std::move(cells));
}

std::uint64_t BoundarySignature::pack() const {
  std::uint64_t key = 0;
  for (size_t i = 0; i < cells_.size(); ++i) {
    key |= static_cast<std::uint64_t>(cells_[i]) << (2 * i);
  }
  return key;
}

bool BoundarySignature::balanced() const {
  int depth = 0;
  for (Cell c : cells_) {
    if (c == Cell::LowerLoopEnd) ++depth;
    if (c == Cell::UpperLoopEnd && --depth < 0) return false;
  }
  return depth == 0;
}

int BoundarySignature::free_ends_placed() const {
  int n = 0;
  for (Cell c : cells_) n += (c == Cell::FreeEnd);
  return n;
}

bool BoundarySignature::all_empty() const {
  for (Cell c : cells_) {
    if (c != Cell::Empty) return false;
  }
  return true;
}

std::vector<BigCount> tm_inbox_row(int h, int l_max, TmMode mode, const TmOptions& opts) {
  if (h < 0 || l_max < 0) throw std::invalid_argument("negative box dimension");
  if (h > opts.max_height) {
    throw resource_limit_error("strip height " + std::to_string(h) + " exceeds cap " +
                               std::to_string(opts.max_height));
  }
  if (l_max > opts.max_length) {
    throw resource_limit_error("box length exceeds cap");
  }
  const int n_cells = h + 2;  // h+1 horizontal cut edges plus the kink edge
  Map cur, next;
  cur[0] = 1;
  BigCount completed = 0;
  std::vector<BigCount> out;
  out.reserve(l_max + 1);

  for (int x = 0; x <= l_max; ++x) {
    for (int y = 0; y <= h; ++y) {
      next.clear();
      if (next.bucket_count() < cur.size()) next.reserve(2 * cur.size());
      if (y == 0) {
        // Entering a new column: slot 0 becomes the (empty) kink below row 0.
        Map shifted;
        shifted.reserve(cur.size());
        for (auto& [key, cnt] : cur) shifted[key << 2] = std::move(cnt);
        process_cell(shifted, next, completed, y, n_cells, /*top_row=*/h == 0, mode);
      } else {
        process_cell(cur, next, completed, y, n_cells, /*top_row=*/y == h, mode);
      }
      cur.swap(next);
    }
    // After the top cell the kink slot is empty, so states are h+1 cells wide.
    out.push_back(completed);
    if (opts.column_observer) {
      StateVector sv;
      sv.entries = cur;
      opts.column_observer(sv, x);
    }
  }
  return out;
}

BigCount tm_inbox_count(int h, int l, const TmOptions& opts) {
  return tm_inbox_row(h, l, TmMode::Walks, opts).back();
}

BigCount tm_polygon_count(int h, int l, const TmOptions& opts) {
  return tm_inbox_row(h, l, TmMode::Polygons, opts).back();
}

void RectTable::set_n(int h, int l, BigCount v) {
  if (h > l) std::swap(h, l);
  n_[{h, l}] = std::move(v);
}

void RectTable::set_a(int h, int l, BigCount v) {
  if (h > l) std::swap(h, l);
  a_[{h, l}] = std::move(v);
}

const BigCount* RectTable::find_n(int h, int l) const {
  if (h > l) std::swap(h, l);
  auto it = n_.find({h, l});
  return it == n_.end() ? nullptr : &it->second;
}

const BigCount* RectTable::find_a(int h, int l) const {
  if (h > l) std::swap(h, l);
  auto it = a_.find({h, l});
  return it == a_.end() ? nullptr : &it->second;
}

const BigCount& RectTable::n_at(int h, int l) const {
  const BigCount* p = find_n(h, l);
  if (!p) {
    throw incomplete_input_error("missing N entry (" + std::to_string(h) + "," +
                                 std::to_string(l) + ")");
  }
  return *p;
}

const BigCount& RectTable::a_at(int h, int l) const {
  const BigCount* p = find_a(h, l);
  if (!p) {
    throw incomplete_input_error("missing boundary-touching entry (" + std::to_string(h) +
                                 "," + std::to_string(l) + ")");
  }
  return *p;
}

BigCount exact_bbox_count(int h, int l, const RectTable& table) {
  auto n = [&](int a, int b) -> BigCount {
    if (a < 0 || b < 0) return 0;
    return table.n_at(a, b);
  };
  BigCount r = n(h, l) - 2 * n(h - 1, l) + n(h - 2, l)      //
               - 2 * n(h, l - 1) + 4 * n(h - 1, l - 1) - 2 * n(h - 2, l - 1)  //
               + n(h, l - 2) - 2 * n(h - 1, l - 2) + n(h - 2, l - 2);
  if (r < 0) {
    throw std::logic_error("negative boundary-touching count: N table is inconsistent");
  }
  return r;
}

BigCount assemble_square_total(int side, const RectTable& table) {
  BigCount total = 0;
  for (int l = 1; l <= side; ++l) {
    total += BigCount(side - l + 1) * (side - l + 1) * table.a_at(l, l);
  }
  for (int h = 0; h < side; ++h) {
    for (int l = h + 1; l <= side; ++l) {
      total += 2 * BigCount(side - l + 1) * (side - h + 1) * table.a_at(h, l);
    }
  }
  return total;
}

RectTable build_rect_table(int l_max, TmMode mode, const TmOptions& opts,
                           const std::function<void(int h)>& progress) {
  RectTable table;
  for (int h = 0; h <= l_max; ++h) {
    auto row = tm_inbox_row(h, l_max, mode, opts);
    for (int l = h; l <= l_max; ++l) table.set_n(h, l, row[l]);
    if (progress) progress(h);
  }
  for (int h = 0; h <= l_max; ++h) {
    for (int l = h; l <= l_max; ++l) table.set_a(h, l, exact_bbox_count(h, l, table));
  }
  return table;
}

}  // namespace sawbox
