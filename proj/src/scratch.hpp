#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "manin/linalg.hpp"

namespace manin::detail {

/// Dense accumulator with a touched list so repeated use stays O(nnz).
class Scratch {
 public:
  explicit Scratch(size_t n) : data_(n), mark_(n, 0) {}
  void add(uint32_t i, const Scalar& c) {
    if (c.is_zero()) return;
    if (!mark_[i]) {
      mark_[i] = 1;
      touched_.push_back(i);
      data_[i] = c;
    } else {
      data_[i] += c;
    }
  }
  void add(const Vector& v, const Scalar& c) {
    for (const auto& [i, x] : v) add(i, c.is_one() ? x : c * x);
  }
  bool all_zero() const {
    return std::all_of(touched_.begin(), touched_.end(), [&](uint32_t i) { return data_[i].is_zero(); });
  }
  Vector take() {
    std::vector<Vector::Term> t;
    for (uint32_t i : touched_) {
      if (!data_[i].is_zero()) t.emplace_back(i, data_[i]);
      mark_[i] = 0;
    }
    touched_.clear();
    return Vector::from_terms(std::move(t));
  }
  void clear() {
    for (uint32_t i : touched_) mark_[i] = 0;
    touched_.clear();
  }

 private:
  std::vector<Scalar> data_;
  std::vector<uint8_t> mark_;
  std::vector<uint32_t> touched_;
};

}  // namespace manin::detail
