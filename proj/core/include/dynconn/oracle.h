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

#ifndef DYNCONN_ORACLE_H_
#define DYNCONN_ORACLE_H_

#include <cstddef>
#include <set>
#include <vector>

#include "dynconn/edge_key.h"

namespace dynconn {

// Exact edge set with from-scratch answers. Every query is a full graph
// search; the class exists to be obviously correct, not fast.
class OracleGraph {
 public:
  explicit OracleGraph(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  const std::set<EdgeKey>& edges() const { return edges_; }
  std::vector<EdgeKey> edge_list() const { return {edges_.begin(), edges_.end()}; }
  bool contains(EdgeKey e) const { return edges_.contains(e); }

  // Throws UsageError on a duplicate insert or an absent delete, and
  // ParameterError on a malformed edge.
  void insert(EdgeKey e);
  void erase(EdgeKey e);

  bool connected(Vertex u, Vertex v) const;
  // Connected, and still connected after removing any single edge.
  bool two_edge_connected(Vertex u, Vertex v) const;
  // Edges with exactly one endpoint in `side`. Throws ParameterError if the
  // set is empty or contains every vertex.
  std::vector<EdgeKey> cutset(const std::vector<Vertex>& side) const;

  // Component label per vertex (smallest vertex id of the component).
  std::vector<Vertex> components() const;

 private:
  bool reachable(Vertex u, Vertex v, const EdgeKey* skip) const;

  std::size_t n_;
  std::set<EdgeKey> edges_;
};

}  // namespace dynconn

#endif  // DYNCONN_ORACLE_H_
