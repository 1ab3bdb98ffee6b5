#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace downcolor {

using VertexId = std::uint32_t;

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids) : ids_(ids) { normalize(); }
  explicit VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) { normalize(); }

  bool contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }

  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  VertexId operator[](std::size_t i) const { return ids_[i]; }

  std::span<const VertexId> ids() const noexcept { return ids_; }

  bool is_subset_of(const VertexSet &other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }

  friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<VertexId> ids_;
};

} // namespace downcolor
