#pragma once

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

/// A linear forest P_{k1} ∪ ... ∪ P_{km}, orders kept non-increasing.
class PathForest {
 public:
  PathForest() = default;

  PathForest(std::initializer_list<int> orders)
      : PathForest(std::vector<int>(orders)) {}

  explicit PathForest(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw ArgumentError("path forest needs at least one path");
    for (int k : orders_)
      if (k < 2)
        throw ArgumentError("path order " + std::to_string(k) +
                            " is below 2");
    std::sort(orders_.begin(), orders_.end(), std::greater<>());
  }

  /// "k1,k2,..." in any order; duplicates allowed.
  static PathForest parse(std::string_view text) {
    std::vector<int> orders;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string_view item = text.substr(pos, comma - pos);
      int k = 0;
      auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), k);
      if (item.empty() || ec != std::errc{} || end != item.data() + item.size())
        throw ArgumentError("bad path order '" + std::string(item) +
                            "' in forest '" + std::string(text) + "'");
      orders.push_back(k);
      pos = comma + 1;
    }
    return PathForest(std::move(orders));
  }

  const std::vector<int>& orders() const { return orders_; }
  int size() const { return static_cast<int>(orders_.size()); }
  int operator[](int i) const { return orders_[i]; }

  /// Σ k_i: vertices needed by an embedding.
  int total() const { return std::accumulate(orders_.begin(), orders_.end(), 0); }

  /// Σ ⌊k_i / 2⌋.
  int half_sum() const {
    int s = 0;
    for (int k : orders_) s += k / 2;
    return s;
  }

  int odd_count() const {
    return static_cast<int>(
        std::count_if(orders_.begin(), orders_.end(), [](int k) { return k % 2; }));
  }
  bool all_odd() const { return odd_count() == size(); }
  int smallest() const { return orders_.back(); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(orders_[i]);
    }
    return out;
  }

  bool operator==(const PathForest&) const = default;

 private:
  std::vector<int> orders_;
};

}  // namespace turan
