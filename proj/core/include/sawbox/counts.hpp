// Exact counting types shared by the enumeration engines.
#pragma once

#include <gmpxx.h>

#include <map>
#include <tuple>

#include "sawbox/lattice.hpp"

namespace sawbox {

/// Arbitrary-precision nonnegative integer; exact at any magnitude.
using BigCount = mpz_class;

class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Map from (class tag, box dimensions) to exact counts.
class CountTable {
 public:
  using Key = std::tuple<WalkClass, int, int>;  // class, height, width

  void set(WalkClass cls, const Box& b, BigCount v) {
    entries_[{cls, b.height, b.width}] = std::move(v);
  }
  const BigCount* find(WalkClass cls, const Box& b) const {
    auto it = entries_.find({cls, b.height, b.width});
    return it == entries_.end() ? nullptr : &it->second;
  }
  const std::map<Key, BigCount>& entries() const { return entries_; }

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  std::map<Key, BigCount> entries_;
};

}  // namespace sawbox
