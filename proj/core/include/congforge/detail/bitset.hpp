//  Copyright 2026 The congforge Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef CONGFORGE_DETAIL_BITSET_HPP_
#define CONGFORGE_DETAIL_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace congforge::detail {

// Row-major square bit matrix, used for order closures and cover relations.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c) {
    bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const {
    return bits_.data() + r * words_;
  }

  // row(dst) |= row(src); returns true when dst changed.
  bool or_row(std::size_t dst, std::size_t src) {
    bool changed = false;
    auto* d = row(dst);
    const auto* s = row(src);
    for (std::size_t w = 0; w < words_; ++w) {
      auto merged = d[w] | s[w];
      changed |= merged != d[w];
      d[w] = merged;
    }
    return changed;
  }

  std::size_t row_count(std::size_t r) const {
    std::size_t total = 0;
    const auto* d = row(r);
    for (std::size_t w = 0; w < words_; ++w) total += std::popcount(d[w]);
    return total;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace congforge::detail

#endif  // CONGFORGE_DETAIL_BITSET_HPP_
