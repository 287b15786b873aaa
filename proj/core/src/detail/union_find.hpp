#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace segal::detail {

// Union-find whose root is always the smallest index of its class.
class MinUnionFind {
 public:
  explicit MinUnionFind(std::size_t n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::size_t size() const { return parent_.size(); }
  std::uint32_t find(std::uint32_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
  }
  // Classes numbered by increasing root; element -> class.
  std::vector<std::uint32_t> classes(std::vector<std::uint32_t>* roots = nullptr) {
    std::vector<std::uint32_t> out(parent_.size()), rank(parent_.size(), 0);
    std::uint32_t k = 0;
    if (roots) roots->clear();
    for (std::uint32_t i = 0; i < parent_.size(); ++i) {
      std::uint32_t r = find(i);
      if (r == i) {
        rank[i] = k++;
        if (roots) roots->push_back(i);
      }
      out[i] = rank[r];
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace segal::detail
