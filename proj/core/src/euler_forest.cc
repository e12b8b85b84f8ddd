// Copyright 2026 The Dynconn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dynconn/euler_forest.h"

#include <algorithm>
#include <cassert>
#include <string>

#include "dynconn/errors.h"

namespace dynconn {

EulerForest::EulerForest(std::size_t n, std::size_t payload_words,
                         std::size_t branching)
    : n_(n), words_(payload_words) {
  if (n == 0) throw ParameterError("EulerForest needs at least one vertex");
  if (n >= kNil / 4) throw ParameterError("EulerForest vertex count too large");
  if (branching < 2) {
    throw ParameterError("EulerForest branching must be >= 2, got " +
                         std::to_string(branching));
  }
  min_fanout_ = branching;
  max_fanout_ = 2 * branching - 1;
  nodes_.resize(n);
  aggs_.assign(n * words_, 0);
  for (auto& node : nodes_) {
    node.in_use = true;
    node.vertices = 1;
    node.leaves = 1;
  }
}

std::uint32_t EulerForest::alloc_node(std::uint32_t height) {
  std::uint32_t id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
  } else {
    id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
    aggs_.resize(aggs_.size() + words_);
  }
  Node& node = nodes_[id];
  node.parent = kNil;
  node.height = height;
  node.vertices = 0;
  node.leaves = height == 0 ? 1 : 0;
  node.dirty = false;
  node.in_use = true;
  node.children.clear();
  return id;
}

void EulerForest::free_node(std::uint32_t x) {
  assert(x >= n_);
  Node& node = nodes_[x];
  node.in_use = false;
  node.parent = kNil;
  node.children.clear();
  free_.push_back(x);
}

std::uint32_t EulerForest::root_of(std::uint32_t x) const {
  while (nodes_[x].parent != kNil) x = nodes_[x].parent;
  return x;
}

void EulerForest::adopt(std::uint32_t parent) {
  for (std::uint32_t c : nodes_[parent].children) nodes_[c].parent = parent;
}

void EulerForest::pull(std::uint32_t x) {
  Node& node = nodes_[x];
  std::uint32_t vertices = 0;
  std::uint32_t leaves = 0;
  for (std::uint32_t c : node.children) {
    vertices += nodes_[c].vertices;
    leaves += nodes_[c].leaves;
  }
  node.vertices = vertices;
  node.leaves = leaves;
  if (words_ > 0) node.dirty = true;
}

std::uint32_t EulerForest::make_parent(std::vector<std::uint32_t> children) {
  assert(!children.empty());
  const std::uint32_t id = alloc_node(nodes_[children.front()].height + 1);
  nodes_[id].children = std::move(children);
  adopt(id);
  pull(id);
  return id;
}

void EulerForest::mark_dirty_upward(std::uint32_t x) {
  x = nodes_[x].parent;
  while (x != kNil && !nodes_[x].dirty) {
    nodes_[x].dirty = true;
    x = nodes_[x].parent;
  }
}

void EulerForest::clean(std::uint32_t x) {
  Node& node = nodes_[x];
  if (!node.dirty) return;
  for (std::uint32_t c : node.children) clean(c);
  // Arc leaves carry no payload and their storage is never written.
  Word* out = agg_ptr(x);
  bool first = true;
  for (std::uint32_t c : node.children) {
    if (c >= n_ && nodes_[c].height == 0) continue;
    const Word* in = agg_ptr(c);
    if (first) {
      std::copy_n(in, words_, out);
      first = false;
    } else {
      for (std::size_t w = 0; w < words_; ++w) out[w] ^= in[w];
    }
  }
  if (first) std::fill_n(out, words_, Word{0});
  node.dirty = false;
}

// ---------------------------------------------------------------------------
// Sequence concatenation and splitting.

std::uint32_t EulerForest::join(std::uint32_t left, std::uint32_t right) {
  if (left == kNil) return right;
  if (right == kNil) return left;
  const std::uint32_t hl = nodes_[left].height;
  const std::uint32_t hr = nodes_[right].height;
  if (hl == hr) return join_equal(left, right);
  if (hl > hr) return join_into_left(left, right);
  return join_into_right(left, right);
}

std::uint32_t EulerForest::join_equal(std::uint32_t left, std::uint32_t right) {
  if (nodes_[left].height == 0) return make_parent({left, right});
  std::vector<std::uint32_t> all = std::move(nodes_[left].children);
  const auto& rc = nodes_[right].children;
  all.insert(all.end(), rc.begin(), rc.end());
  if (all.size() <= max_fanout_) {
    nodes_[left].children = std::move(all);
    adopt(left);
    pull(left);
    free_node(right);
    return left;
  }
  const std::size_t half = all.size() / 2;
  nodes_[left].children.assign(all.begin(), all.begin() + half);
  nodes_[right].children.assign(all.begin() + half, all.end());
  adopt(left);
  adopt(right);
  pull(left);
  pull(right);
  return make_parent({left, right});
}

// `right` is shorter: hang it off the right spine of `left`.
std::uint32_t EulerForest::join_into_left(std::uint32_t left,
                                          std::uint32_t right) {
  const std::uint32_t hr = nodes_[right].height;
  std::uint32_t p = left;
  while (nodes_[p].height > hr + 1) p = nodes_[p].children.back();

  if (hr == 0 || nodes_[right].children.size() >= min_fanout_) {
    nodes_[p].children.push_back(right);
    nodes_[right].parent = p;
    return fix_overflow(p);
  }
  // `right` is a thin root; merge it into its new left sibling.
  const std::uint32_t s = nodes_[p].children.back();
  std::vector<std::uint32_t> all = std::move(nodes_[s].children);
  const auto& rc = nodes_[right].children;
  all.insert(all.end(), rc.begin(), rc.end());
  free_node(right);
  if (all.size() <= max_fanout_) {
    nodes_[s].children = std::move(all);
    adopt(s);
    pull(s);
  } else {
    const std::size_t half = all.size() / 2;
    nodes_[s].children.assign(all.begin(), all.begin() + half);
    adopt(s);
    pull(s);
    const std::uint32_t s2 = make_parent({all.begin() + half, all.end()});
    nodes_[p].children.push_back(s2);
    nodes_[s2].parent = p;
  }
  return fix_overflow(p);
}

// `left` is shorter: hang it off the left spine of `right`.
std::uint32_t EulerForest::join_into_right(std::uint32_t left,
                                           std::uint32_t right) {
  const std::uint32_t hl = nodes_[left].height;
  std::uint32_t p = right;
  while (nodes_[p].height > hl + 1) p = nodes_[p].children.front();

  auto& pc = nodes_[p].children;
  if (hl == 0 || nodes_[left].children.size() >= min_fanout_) {
    pc.insert(pc.begin(), left);
    nodes_[left].parent = p;
    return fix_overflow(p);
  }
  const std::uint32_t s = pc.front();
  std::vector<std::uint32_t> all = std::move(nodes_[left].children);
  const auto& sc = nodes_[s].children;
  all.insert(all.end(), sc.begin(), sc.end());
  free_node(left);
  if (all.size() <= max_fanout_) {
    nodes_[s].children = std::move(all);
    adopt(s);
    pull(s);
  } else {
    const std::size_t half = all.size() / 2;
    nodes_[s].children.assign(all.begin() + half, all.end());
    adopt(s);
    pull(s);
    const std::uint32_t s2 = make_parent({all.begin(), all.begin() + half});
    auto& pc2 = nodes_[p].children;
    pc2.insert(pc2.begin(), s2);
    nodes_[s2].parent = p;
  }
  return fix_overflow(p);
}

// Walks from x to the root, splitting nodes that exceed the fanout bound
// and refreshing counts. Returns the (possibly new) root.
std::uint32_t EulerForest::fix_overflow(std::uint32_t x) {
  while (true) {
    if (nodes_[x].children.size() > max_fanout_) {
      std::vector<std::uint32_t> all = std::move(nodes_[x].children);
      const std::size_t half = all.size() / 2;
      nodes_[x].children.assign(all.begin(), all.begin() + half);
      adopt(x);
      pull(x);
      const std::uint32_t x2 = make_parent({all.begin() + half, all.end()});
      const std::uint32_t par = nodes_[x].parent;
      if (par == kNil) return make_parent({x, x2});
      auto& pc = nodes_[par].children;
      auto it = std::find(pc.begin(), pc.end(), x);
      pc.insert(it + 1, x2);
      nodes_[x2].parent = par;
      x = par;
      continue;
    }
    pull(x);
    if (nodes_[x].parent == kNil) return x;
    x = nodes_[x].parent;
  }
}

std::uint32_t EulerForest::piece(std::vector<std::uint32_t> children,
                                 std::uint32_t reuse) {
  if (children.empty()) return kNil;
  if (children.size() == 1) {
    nodes_[children.front()].parent = kNil;
    return children.front();
  }
  if (reuse == kNil) {
    const std::uint32_t id = make_parent(std::move(children));
    return id;
  }
  nodes_[reuse].children = std::move(children);
  nodes_[reuse].parent = kNil;
  adopt(reuse);
  pull(reuse);
  return reuse;
}

std::pair<std::uint32_t, std::uint32_t> EulerForest::split_before(
    std::uint32_t leaf) {
  std::uint32_t left = kNil;
  std::uint32_t right = leaf;
  std::uint32_t cur = leaf;
  std::uint32_t p = nodes_[leaf].parent;
  nodes_[leaf].parent = kNil;
  std::size_t idx = 0;
  if (p != kNil) {
    const auto& pc = nodes_[p].children;
    idx = static_cast<std::size_t>(std::find(pc.begin(), pc.end(), cur) -
                                   pc.begin());
  }
  while (p != kNil) {
    const std::uint32_t gp = nodes_[p].parent;
    std::size_t gidx = 0;
    if (gp != kNil) {
      const auto& gc = nodes_[gp].children;
      gidx = static_cast<std::size_t>(std::find(gc.begin(), gc.end(), p) -
                                      gc.begin());
    }
    std::vector<std::uint32_t> all = std::move(nodes_[p].children);
    nodes_[p].children.clear();
    nodes_[p].parent = kNil;
    std::vector<std::uint32_t> lc(all.begin(), all.begin() + idx);
    std::vector<std::uint32_t> rc(all.begin() + idx + 1, all.end());
    const bool reuse_left = lc.size() >= 2;
    const bool reuse_right = !reuse_left && rc.size() >= 2;
    const std::uint32_t lp = piece(std::move(lc), reuse_left ? p : kNil);
    const std::uint32_t rp = piece(std::move(rc), reuse_right ? p : kNil);
    if (!reuse_left && !reuse_right) free_node(p);
    left = join(lp, left);
    right = join(right, rp);
    cur = p;
    p = gp;
    idx = gidx;
  }
  return {left, right};
}

std::size_t EulerForest::index_of(std::uint32_t leaf) const {
  std::size_t idx = 0;
  std::uint32_t x = leaf;
  while (nodes_[x].parent != kNil) {
    const std::uint32_t par = nodes_[x].parent;
    for (std::uint32_t c : nodes_[par].children) {
      if (c == x) break;
      idx += nodes_[c].leaves;
    }
    x = par;
  }
  return idx;
}

std::uint32_t EulerForest::leaf_at(std::uint32_t root,
                                   std::size_t index) const {
  std::uint32_t x = root;
  while (!is_leaf(x)) {
    for (std::uint32_t c : nodes_[x].children) {
      if (index < nodes_[c].leaves) {
        x = c;
        break;
      }
      index -= nodes_[c].leaves;
    }
  }
  return x;
}

std::uint32_t EulerForest::reroot(Vertex v) {
  const std::uint32_t r = root_of(v);
  if (leaf_at(r, 0) == v) return r;
  auto [left, right] = split_before(v);
  return join(right, left);
}

std::uint32_t EulerForest::drop_first(std::uint32_t root) {
  if (nodes_[root].leaves == 1) return kNil;
  const std::uint32_t second = leaf_at(root, 1);
  return split_before(second).second;
}

// ---------------------------------------------------------------------------
// Forest operations.

void EulerForest::link(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw ParameterError("link: vertex out of range");
  if (u == v || root_of(u) == root_of(v)) {
    throw UsageError("link: " + std::to_string(u) + " and " +
                     std::to_string(v) + " are already in one tree");
  }
  const std::uint32_t tu = reroot(u);
  const std::uint32_t tv = reroot(v);
  const std::uint32_t uv = alloc_node(0);
  const std::uint32_t vu = alloc_node(0);
  join(join(join(tu, uv), tv), vu);
  arcs_.emplace(arc_key(u, v), uv);
  arcs_.emplace(arc_key(v, u), vu);
}

void EulerForest::cut(Vertex u, Vertex v) {
  auto it_uv = arcs_.find(arc_key(u, v));
  auto it_vu = arcs_.find(arc_key(v, u));
  if (it_uv == arcs_.end() || it_vu == arcs_.end()) {
    throw UsageError("cut: {" + std::to_string(u) + "," + std::to_string(v) +
                     "} is not a tree edge");
  }
  std::uint32_t first = it_uv->second;
  std::uint32_t second = it_vu->second;
  arcs_.erase(it_uv);
  arcs_.erase(it_vu);
  if (index_of(first) > index_of(second)) std::swap(first, second);

  // sequence = A first B second C  ->  trees B and A.C
  const std::uint32_t a = split_before(first).first;
  auto [m, c2] = split_before(second);
  drop_first(m);
  const std::uint32_t c = drop_first(c2);
  join(a, c);
  free_node(first);
  free_node(second);
}

bool EulerForest::has_edge(Vertex u, Vertex v) const {
  return arcs_.contains(arc_key(u, v));
}

TreeId EulerForest::find_tree(Vertex v) const {
  if (v >= n_) throw ParameterError("find_tree: vertex out of range");
  return TreeId{root_of(v)};
}

void EulerForest::check_tree(std::uint32_t t) const {
  if (t >= nodes_.size() || !nodes_[t].in_use || nodes_[t].parent != kNil ||
      nodes_[t].vertices == 0) {
    throw UsageError("stale tree id " + std::to_string(t));
  }
}

std::size_t EulerForest::tree_size(TreeId t) const {
  check_tree(t.value);
  return nodes_[t.value].vertices;
}

std::span<const Word> EulerForest::aggregate(TreeId t) {
  check_tree(t.value);
  if (words_ == 0) return {};
  clean(t.value);
  return {agg_ptr(t.value), words_};
}

std::span<const Word> EulerForest::payload(Vertex v) const {
  if (v >= n_) throw ParameterError("payload: vertex out of range");
  return {agg_ptr(v), words_};
}

void EulerForest::xor_payload(Vertex v, std::span<const Word> delta) {
  if (delta.size() != words_) {
    throw ParameterError("xor_payload: delta has " +
                         std::to_string(delta.size()) + " words, expected " +
                         std::to_string(words_));
  }
  xor_payload(v, 0, delta);
}

void EulerForest::xor_payload(Vertex v, std::size_t offset,
                              std::span<const Word> delta) {
  if (v >= n_) throw ParameterError("xor_payload: vertex out of range");
  if (offset + delta.size() > words_) {
    throw ParameterError("xor_payload: delta exceeds payload width");
  }
  Word* p = agg_ptr(v) + offset;
  for (std::size_t w = 0; w < delta.size(); ++w) p[w] ^= delta[w];
  mark_dirty_upward(v);
}

std::vector<EdgeKey> EulerForest::edges() const {
  std::vector<EdgeKey> out;
  out.reserve(arcs_.size() / 2);
  for (const auto& [key, id] : arcs_) {
    const auto u = static_cast<Vertex>(key >> 32);
    const auto v = static_cast<Vertex>(key & 0xffffffffu);
    if (u < v) out.push_back(EdgeKey{u, v});
  }
  return out;
}

std::vector<Vertex> EulerForest::tree_vertices(Vertex v) const {
  std::vector<Vertex> out;
  std::vector<std::uint32_t> stack{root_of(find_tree(v).value)};
  while (!stack.empty()) {
    const std::uint32_t x = stack.back();
    stack.pop_back();
    if (is_leaf(x)) {
      if (x < n_) out.push_back(static_cast<Vertex>(x));
      continue;
    }
    const auto& c = nodes_[x].children;
    for (auto it = c.rbegin(); it != c.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::size_t EulerForest::aggregate_word_count() const {
  std::size_t internal = 0;
  for (const auto& node : nodes_) {
    if (node.in_use && node.height > 0) ++internal;
  }
  return internal * words_;
}

bool EulerForest::check_node(std::uint32_t x, bool is_root,
                             std::vector<Word>& out) {
  const Node& node = nodes_[x];
  if (!node.in_use) return false;
  out.assign(words_, 0);
  if (node.height == 0) {
    if (!node.children.empty() || node.leaves != 1) return false;
    if (node.vertices != (x < n_ ? 1u : 0u)) return false;
    if (x < n_) std::copy_n(agg_ptr(x), words_, out.begin());
    return true;
  }
  const std::size_t fan = node.children.size();
  if (fan > max_fanout_ || fan < 2) return false;
  if (!is_root && fan < min_fanout_) return false;
  std::uint32_t vertices = 0;
  std::uint32_t leaves = 0;
  std::vector<Word> child;
  for (std::uint32_t c : node.children) {
    if (nodes_[c].parent != x || nodes_[c].height + 1 != node.height) {
      return false;
    }
    if (!check_node(c, false, child)) return false;
    for (std::size_t w = 0; w < words_; ++w) out[w] ^= child[w];
    vertices += nodes_[c].vertices;
    leaves += nodes_[c].leaves;
  }
  return vertices == node.vertices && leaves == node.leaves;
}

bool EulerForest::self_check() {
  std::vector<int> seen(n_, 0);
  std::vector<Word> expect;
  std::size_t arc_leaves = 0;
  for (std::uint32_t x = 0; x < nodes_.size(); ++x) {
    const Node& node = nodes_[x];
    if (!node.in_use || node.parent != kNil) continue;
    if (node.height == 0 && x >= n_) return false;  // orphan arc leaf
    if (!check_node(x, true, expect)) return false;
    clean(x);
    if (!std::equal(expect.begin(), expect.end(), agg_ptr(x))) return false;
    std::vector<std::uint32_t> stack{x};
    while (!stack.empty()) {
      const std::uint32_t y = stack.back();
      stack.pop_back();
      if (is_leaf(y)) {
        if (y < n_) {
          ++seen[y];
        } else {
          ++arc_leaves;
        }
      }
      for (std::uint32_t c : nodes_[y].children) stack.push_back(c);
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) {
    return false;
  }
  if (arc_leaves != arcs_.size()) return false;
  for (const auto& [key, id] : arcs_) {
    const auto u = static_cast<Vertex>(key >> 32);
    const auto v = static_cast<Vertex>(key & 0xffffffffu);
    if (!nodes_[id].in_use || root_of(id) != root_of(u) ||
        root_of(id) != root_of(v)) {
      return false;
    }
  }
  return true;
}

}  // namespace dynconn
