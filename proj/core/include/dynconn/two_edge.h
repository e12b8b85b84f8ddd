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

#ifndef DYNCONN_TWO_EDGE_H_
#define DYNCONN_TWO_EDGE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "dynconn/connectivity.h"
#include "dynconn/edge_key.h"

namespace dynconn {

// Bridges of a simple undirected graph, sorted.
std::vector<EdgeKey> find_bridges(std::size_t n, std::span<const EdgeKey> edges);

// Label per vertex such that two vertices share a label iff they are
// connected once every bridge is removed.
std::vector<Vertex> two_edge_components(std::size_t n,
                                        std::span<const EdgeKey> edges);

// One-shot query: are u and v 2-edge-connected in `edges`?
bool bridge_backend_query(std::size_t n, std::span<const EdgeKey> edges,
                          Vertex u, Vertex v);

// A dynamic 2-edge-connectivity engine fed with certificate edge deltas.
class TwoEdgeBackend {
 public:
  virtual ~TwoEdgeBackend() = default;
  virtual void add_edge(EdgeKey e) = 0;
  virtual void remove_edge(EdgeKey e) = 0;
  virtual bool two_edge_connected(Vertex u, Vertex v) = 0;
};

// Recomputes bridges with a linear-time pass whenever the edge set changed
// since the last query.
class BridgeBackend final : public TwoEdgeBackend {
 public:
  explicit BridgeBackend(std::size_t n) : n_(n) {}

  void add_edge(EdgeKey e) override;
  void remove_edge(EdgeKey e) override;
  bool two_edge_connected(Vertex u, Vertex v) override;

  const std::set<EdgeKey>& edges() const { return edges_; }

 private:
  std::size_t n_;
  std::set<EdgeKey> edges_;
  std::vector<Vertex> labels_;
  bool stale_ = true;
};

// 2-edge connectivity through a sparse certificate. One connectivity engine
// keeps a spanning forest F1 of G, a second keeps a spanning forest F2 of
// G minus F1, and F1 u F2 (fewer than 2n edges, same 2-edge-connected
// pairs as G) is handed to the backend.
class TwoEdgeConnectivity {
 public:
  // `config.seed` is ignored; the two engines use `seed1` and `seed2`, which
  // must differ. A BridgeBackend is used when `backend` is null.
  TwoEdgeConnectivity(const ConnectivityConfig& config, std::uint64_t seed1,
                      std::uint64_t seed2,
                      std::unique_ptr<TwoEdgeBackend> backend = nullptr);

  std::size_t vertex_count() const { return n_; }

  void insert(EdgeKey e);
  void erase(EdgeKey e);

  bool two_edge_connected(Vertex u, Vertex v);
  bool connected(Vertex u, Vertex v) const { return first_.connected(u, v); }

  // Current certificate F1 u F2.
  std::vector<EdgeKey> certificate() const;
  std::size_t certificate_size() const { return cert_count_.size(); }

  // True iff the incrementally kept certificate equals F1 u F2 read back
  // from both engines, and F1, F2 are disjoint.
  bool certificate_consistent() const;

  DynamicConnectivity& first() { return first_; }
  DynamicConnectivity& second() { return second_; }

 private:
  void propagate(std::optional<EdgeKey> deleted);
  void cert_add(EdgeKey e);
  void cert_remove(EdgeKey e);
  bool in_graph(EdgeKey e) const;
  bool in_residual(EdgeKey e) const;

  std::size_t n_;
  VerifyMode mode_;
  DynamicConnectivity first_;
  DynamicConnectivity second_;
  std::set<EdgeKey> f1_;
  std::set<EdgeKey> f2_;
  std::map<EdgeKey, int> cert_count_;
  std::unique_ptr<TwoEdgeBackend> backend_;
};

}  // namespace dynconn

#endif  // DYNCONN_TWO_EDGE_H_
