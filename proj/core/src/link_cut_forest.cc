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

#include "dynconn/link_cut_forest.h"

#include <string>
#include <utility>

#include "dynconn/errors.h"

namespace dynconn {

LinkCutForest::LinkCutForest(std::size_t n) : n_(n), nodes_(n) {
  if (n == 0) throw ParameterError("LinkCutForest needs at least one vertex");
}

void LinkCutForest::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range");
  }
}

bool LinkCutForest::is_splay_root(std::uint32_t x) const {
  const std::uint32_t p = nodes_[x].parent;
  return p == kNil || (nodes_[p].child[0] != x && nodes_[p].child[1] != x);
}

void LinkCutForest::push(std::uint32_t x) {
  Node& node = nodes_[x];
  if (!node.flip) return;
  std::swap(node.child[0], node.child[1]);
  for (std::uint32_t c : node.child) {
    if (c != kNil) nodes_[c].flip = !nodes_[c].flip;
  }
  node.flip = false;
}

void LinkCutForest::update(std::uint32_t x) {
  Node& node = nodes_[x];
  std::uint32_t best = node.weight == kNoWeight ? kNil : x;
  int best_w = node.weight;
  for (std::uint32_t c : node.child) {
    if (c != kNil && best_weight(c) > best_w) {
      best = nodes_[c].best;
      best_w = best_weight(c);
    }
  }
  node.best = best;
}

void LinkCutForest::rotate(std::uint32_t x) {
  const std::uint32_t p = nodes_[x].parent;
  const std::uint32_t g = nodes_[p].parent;
  const int dir = nodes_[p].child[1] == x ? 1 : 0;
  const std::uint32_t b = nodes_[x].child[dir ^ 1];
  if (!is_splay_root(p)) {
    Node& gn = nodes_[g];
    gn.child[gn.child[1] == p ? 1 : 0] = x;
  }
  nodes_[x].parent = g;
  nodes_[x].child[dir ^ 1] = p;
  nodes_[p].parent = x;
  nodes_[p].child[dir] = b;
  if (b != kNil) nodes_[b].parent = p;
  update(p);
  update(x);
}

void LinkCutForest::splay(std::uint32_t x) {
  // Push pending flips from the splay root down to x.
  std::vector<std::uint32_t> path{x};
  for (std::uint32_t y = x; !is_splay_root(y); y = nodes_[y].parent) {
    path.push_back(nodes_[y].parent);
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) push(*it);

  while (!is_splay_root(x)) {
    const std::uint32_t p = nodes_[x].parent;
    if (!is_splay_root(p)) {
      const std::uint32_t g = nodes_[p].parent;
      const bool zigzig = (nodes_[g].child[0] == p) == (nodes_[p].child[0] == x);
      rotate(zigzig ? p : x);
    }
    rotate(x);
  }
}

void LinkCutForest::access(std::uint32_t x) {
  std::uint32_t last = kNil;
  for (std::uint32_t y = x; y != kNil; y = nodes_[y].parent) {
    splay(y);
    nodes_[y].child[1] = last;
    update(y);
    last = y;
  }
  splay(x);
}

void LinkCutForest::make_root(std::uint32_t x) {
  access(x);
  nodes_[x].flip = !nodes_[x].flip;
  push(x);
}

std::uint32_t LinkCutForest::find_root(std::uint32_t x) {
  access(x);
  std::uint32_t y = x;
  push(y);
  while (nodes_[y].child[0] != kNil) {
    y = nodes_[y].child[0];
    push(y);
  }
  splay(y);
  return y;
}

void LinkCutForest::raw_link(std::uint32_t child, std::uint32_t parent) {
  make_root(child);
  nodes_[child].parent = parent;
}

void LinkCutForest::raw_cut(std::uint32_t u, std::uint32_t v) {
  make_root(u);
  access(v);
  // v's left child is now exactly u (they are adjacent).
  nodes_[v].child[0] = kNil;
  nodes_[u].parent = kNil;
  update(v);
}

void LinkCutForest::link(Vertex u, Vertex v, int weight) {
  check_vertex(u);
  check_vertex(v);
  if (weight < 0) throw ParameterError("edge weight must be nonnegative");
  if (u == v || connected(u, v)) {
    throw UsageError("link: " + std::to_string(u) + " and " +
                     std::to_string(v) + " are already connected");
  }
  std::uint32_t e;
  if (!free_.empty()) {
    e = free_.back();
    free_.pop_back();
    nodes_[e] = Node{};
  } else {
    e = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
    edge_of_node_.emplace_back();
  }
  const EdgeKey key = EdgeKey::canonical(u, v);
  nodes_[e].weight = weight;
  update(e);
  edge_of_node_[e - n_] = key;
  edges_.emplace(key, e);
  raw_link(u, e);
  raw_link(e, v);
}

void LinkCutForest::cut(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  auto it = u == v ? edges_.end() : edges_.find(EdgeKey::canonical(u, v));
  if (it == edges_.end()) {
    throw UsageError("cut: {" + std::to_string(u) + "," + std::to_string(v) +
                     "} is not an edge");
  }
  const std::uint32_t e = it->second;
  edges_.erase(it);
  raw_cut(u, e);
  raw_cut(e, v);
  nodes_[e] = Node{};
  free_.push_back(e);
}

bool LinkCutForest::connected(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return true;
  return find_root(u) == find_root(v);
}

bool LinkCutForest::has_edge(Vertex u, Vertex v) const {
  return u != v && edges_.contains(EdgeKey::canonical(u, v));
}

int LinkCutForest::weight(Vertex u, Vertex v) const {
  auto it = u == v ? edges_.end() : edges_.find(EdgeKey::canonical(u, v));
  if (it == edges_.end()) throw UsageError("weight: not an edge");
  return nodes_[it->second].weight;
}

LinkCutForest::PathMax LinkCutForest::path_max(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !connected(u, v)) {
    throw UsageError("path_max: no path between " + std::to_string(u) +
                     " and " + std::to_string(v));
  }
  make_root(u);
  access(v);
  const std::uint32_t best = nodes_[v].best;
  return PathMax{edge_of_node_[best - n_], nodes_[best].weight};
}

std::vector<std::pair<EdgeKey, int>> LinkCutForest::edges() const {
  std::vector<std::pair<EdgeKey, int>> out;
  out.reserve(edges_.size());
  for (const auto& [key, node] : edges_) {
    out.emplace_back(key, nodes_[node].weight);
  }
  return out;
}

}  // namespace dynconn
