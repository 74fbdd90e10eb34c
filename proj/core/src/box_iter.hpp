#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "abeldim/lattice.hpp"

namespace abeldim::detail {

// Odometer over the integer points of [lo, hi], first coordinate fastest.
class BoxIterator {
 public:
  BoxIterator(Cycle lo, Cycle hi) : lo_(std::move(lo)), hi_(std::move(hi)), cur_(lo_) {}

  const Cycle& point() const noexcept { return cur_; }

  bool next() {
    for (std::size_t v = 0; v < cur_.size(); ++v) {
      if (cur_[v] < hi_[v]) {
        ++cur_[v];
        return true;
      }
      cur_[v] = lo_[v];
    }
    return false;
  }

 private:
  Cycle lo_;
  Cycle hi_;
  Cycle cur_;
};

// Mixed-radix linear indexing of [0, hi]; index order matches BoxIterator,
// so every l - E_v precedes l.
class BoxIndex {
 public:
  explicit BoxIndex(const Cycle& hi) : hi_(hi), stride_(hi.size()) {
    std::size_t s = 1;
    for (std::size_t v = 0; v < hi.size(); ++v) {
      stride_[v] = s;
      s *= static_cast<std::size_t>(hi[v] + 1);
    }
    volume_ = s;
  }

  std::size_t volume() const noexcept { return volume_; }
  std::size_t stride(std::size_t v) const { return stride_[v]; }
  const Cycle& upper() const noexcept { return hi_; }

  std::size_t index(const Cycle& l) const {
    std::size_t i = 0;
    for (std::size_t v = 0; v < l.size(); ++v) i += static_cast<std::size_t>(l[v]) * stride_[v];
    return i;
  }

 private:
  Cycle hi_;
  std::vector<std::size_t> stride_;
  std::size_t volume_ = 1;
};

}  // namespace abeldim::detail
