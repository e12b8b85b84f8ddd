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

#include "dynconn/two_edge.h"

#include <algorithm>
#include <utility>

#include "dynconn/errors.h"

namespace dynconn {

namespace {

struct Adjacency {
  // CSR layout: neighbours of v are target[offset[v] .. offset[v+1]), with
  // the index of the originating edge alongside.
  std::vector<std::size_t> offset;
  std::vector<Vertex> target;
  std::vector<std::size_t> edge;
};

Adjacency build_adjacency(std::size_t n, std::span<const EdgeKey> edges) {
  Adjacency adj;
  adj.offset.assign(n + 1, 0);
  for (const EdgeKey& e : edges) {
    ++adj.offset[e.x + 1];
    ++adj.offset[e.y + 1];
  }
  for (std::size_t v = 0; v < n; ++v) adj.offset[v + 1] += adj.offset[v];
  adj.target.resize(2 * edges.size());
  adj.edge.resize(2 * edges.size());
  std::vector<std::size_t> fill(adj.offset.begin(), adj.offset.end() - 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeKey& e = edges[i];
    adj.target[fill[e.x]] = e.y;
    adj.edge[fill[e.x]++] = i;
    adj.target[fill[e.y]] = e.x;
    adj.edge[fill[e.y]++] = i;
  }
  return adj;
}

std::vector<bool> bridge_mask(std::size_t n, std::span<const EdgeKey> edges) {
  const Adjacency adj = build_adjacency(n, edges);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kNone), low(n, 0), next(n, 0);
  std::vector<std::size_t> parent_edge(n, kNone);
  std::vector<bool> bridge(edges.size(), false);
  std::size_t timer = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kNone) continue;
    disc[root] = low[root] = timer++;
    next[root] = adj.offset[root];
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      if (next[v] < adj.offset[v + 1]) {
        const std::size_t slot = next[v]++;
        const Vertex w = adj.target[slot];
        if (adj.edge[slot] == parent_edge[v]) continue;
        if (disc[w] == kNone) {
          disc[w] = low[w] = timer++;
          parent_edge[w] = adj.edge[slot];
          next[w] = adj.offset[w];
          stack.push_back(w);
        } else {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      if (parent_edge[v] != kNone) {
        const EdgeKey& pe = edges[parent_edge[v]];
        const Vertex p = pe.x == v ? pe.y : pe.x;
        low[p] = std::min(low[p], low[v]);
        if (low[v] > disc[p]) bridge[parent_edge[v]] = true;
      }
    }
  }
  return bridge;
}

}  // namespace

std::vector<EdgeKey> find_bridges(std::size_t n,
                                  std::span<const EdgeKey> edges) {
  const auto mask = bridge_mask(n, edges);
  std::vector<EdgeKey> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (mask[i]) out.push_back(edges[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> two_edge_components(std::size_t n,
                                        std::span<const EdgeKey> edges) {
  const auto mask = bridge_mask(n, edges);
  const Adjacency adj = build_adjacency(n, edges);
  constexpr Vertex kUnset = static_cast<Vertex>(-1);
  std::vector<Vertex> label(n, kUnset);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != kUnset) continue;
    label[s] = s;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (std::size_t k = adj.offset[v]; k < adj.offset[v + 1]; ++k) {
        if (mask[adj.edge[k]]) continue;
        const Vertex w = adj.target[k];
        if (label[w] == kUnset) {
          label[w] = s;
          stack.push_back(w);
        }
      }
    }
  }
  return label;
}

bool bridge_backend_query(std::size_t n, std::span<const EdgeKey> edges,
                          Vertex u, Vertex v) {
  if (u >= n || v >= n) throw ParameterError("vertex out of range");
  if (u == v) return true;
  const auto label = two_edge_components(n, edges);
  return label[u] == label[v];
}

void BridgeBackend::add_edge(EdgeKey e) {
  if (!edges_.insert(e).second) throw UsageError("backend: duplicate edge");
  stale_ = true;
}

void BridgeBackend::remove_edge(EdgeKey e) {
  if (edges_.erase(e) == 0) throw UsageError("backend: absent edge");
  stale_ = true;
}

bool BridgeBackend::two_edge_connected(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw ParameterError("vertex out of range");
  if (u == v) return true;
  if (stale_) {
    const std::vector<EdgeKey> list(edges_.begin(), edges_.end());
    labels_ = two_edge_components(n_, list);
    stale_ = false;
  }
  return labels_[u] == labels_[v];
}

// ---------------------------------------------------------------------------

namespace {

ConnectivityConfig with_seed(ConnectivityConfig config, std::uint64_t seed) {
  config.seed = seed;
  return config;
}

std::uint64_t distinct(std::uint64_t seed1, std::uint64_t seed2) {
  if (seed1 == seed2) {
    throw UsageError("two-edge engines need independent seeds");
  }
  return seed2;
}

}  // namespace

TwoEdgeConnectivity::TwoEdgeConnectivity(
    const ConnectivityConfig& config, std::uint64_t seed1, std::uint64_t seed2,
    std::unique_ptr<TwoEdgeBackend> backend)
    : n_(config.n),
      mode_(config.mode),
      first_(with_seed(config, seed1)),
      second_(with_seed(config, distinct(seed1, seed2))),
      backend_(backend ? std::move(backend)
                       : std::make_unique<BridgeBackend>(config.n)) {}

bool TwoEdgeConnectivity::in_graph(EdgeKey e) const {
  return first_.tier(0).has_edge(e);
}

bool TwoEdgeConnectivity::in_residual(EdgeKey e) const {
  return second_.tier(0).has_edge(e);
}

void TwoEdgeConnectivity::insert(EdgeKey e) {
  first_.insert(e);
  second_.insert(e);
  propagate(std::nullopt);
}

void TwoEdgeConnectivity::erase(EdgeKey e) {
  const bool was_tree = f1_.contains(e);
  first_.erase(e);
  if (!was_tree) second_.erase(e);
  propagate(e);
}

// Feeds F1 changes into the residual graph, then F1/F2 changes into the
// certificate, in that order.
void TwoEdgeConnectivity::propagate(std::optional<EdgeKey> deleted) {
  const bool listed = mode_ == VerifyMode::kEdgeList;
  for (const auto& ev : first_.drain_events()) {
    if (ev.kind == ForestChangeEvent::Kind::kAdded) {
      f1_.insert(ev.edge);
      cert_add(ev.edge);
      if (!listed || in_residual(ev.edge)) second_.erase(ev.edge);
    } else {
      f1_.erase(ev.edge);
      cert_remove(ev.edge);
      // A forest edge leaving F1 because it was deleted from G must not
      // re-enter the residual graph.
      const bool gone = listed ? !in_graph(ev.edge) : ev.edge == deleted;
      if (!gone && (!listed || !in_residual(ev.edge))) second_.insert(ev.edge);
    }
  }
  for (const auto& ev : second_.drain_events()) {
    if (ev.kind == ForestChangeEvent::Kind::kAdded) {
      f2_.insert(ev.edge);
      cert_add(ev.edge);
    } else {
      f2_.erase(ev.edge);
      cert_remove(ev.edge);
    }
  }
}

void TwoEdgeConnectivity::cert_add(EdgeKey e) {
  if (++cert_count_[e] == 1) backend_->add_edge(e);
}

void TwoEdgeConnectivity::cert_remove(EdgeKey e) {
  auto it = cert_count_.find(e);
  if (it == cert_count_.end()) return;
  if (--it->second == 0) {
    cert_count_.erase(it);
    backend_->remove_edge(e);
  }
}

bool TwoEdgeConnectivity::two_edge_connected(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw ParameterError("vertex out of range");
  if (u == v) return true;
  return backend_->two_edge_connected(u, v);
}

std::vector<EdgeKey> TwoEdgeConnectivity::certificate() const {
  std::vector<EdgeKey> out;
  out.reserve(cert_count_.size());
  for (const auto& [e, count] : cert_count_) out.push_back(e);
  return out;
}

bool TwoEdgeConnectivity::certificate_consistent() const {
  const auto a = first_.spanning_forest();
  const auto b = second_.spanning_forest();
  std::set<EdgeKey> f1(a.begin(), a.end());
  std::set<EdgeKey> f2(b.begin(), b.end());
  if (f1 != f1_ || f2 != f2_) return false;
  std::set<EdgeKey> both;
  std::set_intersection(f1.begin(), f1.end(), f2.begin(), f2.end(),
                        std::inserter(both, both.end()));
  if (!both.empty()) return false;
  std::set<EdgeKey> all = f1;
  all.insert(f2.begin(), f2.end());
  const auto cert = certificate();
  return std::set<EdgeKey>(cert.begin(), cert.end()) == all;
}

}  // namespace dynconn
