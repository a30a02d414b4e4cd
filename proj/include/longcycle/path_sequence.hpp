#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

/// A sequence of distinct vertices supporting O(log n) position lookup,
/// segment reversal and rotation. Backed by an implicit treap with parent
/// pointers and lazy reversal flags; node i holds vertex i.
class PathSequence {
 public:
  /// `universe` bounds the vertex ids; `order` lists the sequence.
  PathSequence(std::size_t universe, std::span<const Vertex> order);

  [[nodiscard]] std::size_t size() const { return root_ == kNil ? 0 : size_[root_]; }
  [[nodiscard]] bool contains(Vertex v) const { return v < present_.size() && present_[v]; }

  [[nodiscard]] Vertex at(std::size_t index);
  [[nodiscard]] std::size_t index_of(Vertex v);
  [[nodiscard]] Vertex front() { return at(0); }
  [[nodiscard]] Vertex back() { return at(size() - 1); }

  /// Reverses positions [first, last] inclusive.
  void reverse(std::size_t first, std::size_t last);

  /// Moves positions [0, count) to the end.
  void rotate(std::size_t count);

  [[nodiscard]] std::vector<Vertex> to_vector();

 private:
  static constexpr std::uint32_t kNil = static_cast<std::uint32_t>(-1);

  std::size_t sz(std::uint32_t t) const { return t == kNil ? 0 : size_[t]; }
  void pull(std::uint32_t t);
  void push(std::uint32_t t);
  void split(std::uint32_t t, std::size_t k, std::uint32_t& a, std::uint32_t& b);
  std::uint32_t merge(std::uint32_t a, std::uint32_t b);

  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint32_t> prio_;
  std::vector<std::uint8_t> flip_;
  std::vector<std::uint8_t> present_;
  std::vector<std::uint32_t> scratch_;
  std::uint32_t root_ = kNil;
};

}  // namespace longcycle
