#include "longcycle/path_sequence.hpp"

#include <utility>

#include "longcycle/error.hpp"
#include "longcycle/rng.hpp"

namespace longcycle {

PathSequence::PathSequence(std::size_t universe, std::span<const Vertex> order)
    : left_(universe, kNil),
      right_(universe, kNil),
      parent_(universe, kNil),
      size_(universe, 1),
      prio_(universe),
      flip_(universe, 0),
      present_(universe, 0) {
  for (std::size_t i = 0; i < universe; ++i) prio_[i] = static_cast<std::uint32_t>(mix64(i + 1));
  for (Vertex v : order) {
    if (v >= universe || present_[v]) throw InvalidParameter("path sequence: bad or repeated vertex");
    present_[v] = 1;
  }
  // Cartesian-tree build on the max-heap priorities, then sizes post-order.
  std::vector<std::uint32_t> stack;
  for (Vertex v : order) {
    std::uint32_t last = kNil;
    while (!stack.empty() && prio_[stack.back()] < prio_[v]) {
      last = stack.back();
      stack.pop_back();
    }
    left_[v] = last;
    if (last != kNil) parent_[last] = v;
    if (!stack.empty()) {
      right_[stack.back()] = v;
      parent_[v] = stack.back();
    }
    stack.push_back(v);
  }
  if (stack.empty()) return;
  root_ = stack.front();
  std::vector<std::pair<std::uint32_t, bool>> todo{{root_, false}};
  while (!todo.empty()) {
    auto [t, done] = todo.back();
    todo.pop_back();
    if (done) {
      pull(t);
      continue;
    }
    todo.emplace_back(t, true);
    if (left_[t] != kNil) todo.emplace_back(left_[t], false);
    if (right_[t] != kNil) todo.emplace_back(right_[t], false);
  }
}

void PathSequence::pull(std::uint32_t t) { size_[t] = static_cast<std::uint32_t>(1 + sz(left_[t]) + sz(right_[t])); }

void PathSequence::push(std::uint32_t t) {
  if (!flip_[t]) return;
  std::swap(left_[t], right_[t]);
  if (left_[t] != kNil) flip_[left_[t]] ^= 1;
  if (right_[t] != kNil) flip_[right_[t]] ^= 1;
  flip_[t] = 0;
}

void PathSequence::split(std::uint32_t t, std::size_t k, std::uint32_t& a, std::uint32_t& b) {
  if (t == kNil) {
    a = b = kNil;
    return;
  }
  push(t);
  if (sz(left_[t]) >= k) {
    std::uint32_t l = kNil;
    split(left_[t], k, a, l);
    left_[t] = l;
    if (l != kNil) parent_[l] = t;
    b = t;
  } else {
    std::uint32_t r = kNil;
    split(right_[t], k - sz(left_[t]) - 1, r, b);
    right_[t] = r;
    if (r != kNil) parent_[r] = t;
    a = t;
  }
  parent_[t] = kNil;
  pull(t);
  if (a != kNil) parent_[a] = kNil;
  if (b != kNil) parent_[b] = kNil;
}

std::uint32_t PathSequence::merge(std::uint32_t a, std::uint32_t b) {
  if (a == kNil) return b;
  if (b == kNil) return a;
  if (prio_[a] > prio_[b]) {
    push(a);
    const std::uint32_t r = merge(right_[a], b);
    right_[a] = r;
    parent_[r] = a;
    pull(a);
    parent_[a] = kNil;
    return a;
  }
  push(b);
  const std::uint32_t l = merge(a, left_[b]);
  left_[b] = l;
  parent_[l] = b;
  pull(b);
  parent_[b] = kNil;
  return b;
}

Vertex PathSequence::at(std::size_t index) {
  if (index >= size()) throw InvalidParameter("path sequence: index out of range");
  std::uint32_t t = root_;
  for (;;) {
    push(t);
    const std::size_t ls = sz(left_[t]);
    if (index < ls) {
      t = left_[t];
    } else if (index == ls) {
      return t;
    } else {
      index -= ls + 1;
      t = right_[t];
    }
  }
}

std::size_t PathSequence::index_of(Vertex v) {
  if (!contains(v)) throw InvalidParameter("path sequence: vertex not present");
  scratch_.clear();
  for (std::uint32_t t = v; t != kNil; t = parent_[t]) scratch_.push_back(t);
  for (auto it = scratch_.rbegin(); it != scratch_.rend(); ++it) push(*it);
  std::size_t index = sz(left_[v]);
  for (std::size_t i = 1; i < scratch_.size(); ++i) {
    const std::uint32_t p = scratch_[i];
    if (right_[p] == scratch_[i - 1]) index += sz(left_[p]) + 1;
  }
  return index;
}

void PathSequence::reverse(std::size_t first, std::size_t last) {
  if (first >= last) return;
  if (last >= size()) throw InvalidParameter("path sequence: range out of bounds");
  std::uint32_t a, b, c;
  split(root_, first, a, b);
  std::uint32_t mid, rest;
  split(b, last - first + 1, mid, rest);
  flip_[mid] ^= 1;
  c = merge(mid, rest);
  root_ = merge(a, c);
}

void PathSequence::rotate(std::size_t count) {
  if (count == 0 || count >= size()) return;
  std::uint32_t a, b;
  split(root_, count, a, b);
  root_ = merge(b, a);
}

std::vector<Vertex> PathSequence::to_vector() {
  std::vector<Vertex> out;
  out.reserve(size());
  std::vector<std::uint32_t> stack;
  std::uint32_t t = root_;
  while (t != kNil || !stack.empty()) {
    while (t != kNil) {
      push(t);
      stack.push_back(t);
      t = left_[t];
    }
    t = stack.back();
    stack.pop_back();
    out.push_back(t);
    t = right_[t];
  }
  return out;
}

}  // namespace longcycle
