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

#include "dynconn/oracle.h"

#include <algorithm>
#include <deque>
#include <sstream>
#include <string>

#include "dynconn/errors.h"

namespace dynconn {

OracleGraph::OracleGraph(std::size_t n) : n_(n) {
  if (n == 0) throw ParameterError("oracle needs at least one vertex");
}

void OracleGraph::insert(EdgeKey e) {
  if (!e.valid_for(n_)) throw ParameterError("oracle: malformed edge");
  if (!edges_.insert(e).second) {
    std::ostringstream os;
    os << "oracle: insert of present edge " << e;
    throw UsageError(os.str());
  }
}

void OracleGraph::erase(EdgeKey e) {
  if (!e.valid_for(n_)) throw ParameterError("oracle: malformed edge");
  if (edges_.erase(e) == 0) {
    std::ostringstream os;
    os << "oracle: delete of absent edge " << e;
    throw UsageError(os.str());
  }
}

bool OracleGraph::reachable(Vertex u, Vertex v, const EdgeKey* skip) const {
  if (u == v) return true;
  std::vector<std::vector<Vertex>> adj(n_);
  for (const EdgeKey& e : edges_) {
    if (skip != nullptr && e == *skip) continue;
    adj[e.x].push_back(e.y);
    adj[e.y].push_back(e.x);
  }
  std::vector<bool> seen(n_, false);
  std::deque<Vertex> queue{u};
  seen[u] = true;
  while (!queue.empty()) {
    const Vertex w = queue.front();
    queue.pop_front();
    for (Vertex z : adj[w]) {
      if (z == v) return true;
      if (!seen[z]) {
        seen[z] = true;
        queue.push_back(z);
      }
    }
  }
  return false;
}

bool OracleGraph::connected(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw ParameterError("oracle: vertex out of range");
  return reachable(u, v, nullptr);
}

bool OracleGraph::two_edge_connected(Vertex u, Vertex v) const {
  if (!connected(u, v)) return false;
  if (u == v) return true;
  for (const EdgeKey& e : edges_) {
    if (!reachable(u, v, &e)) return false;
  }
  return true;
}

std::vector<EdgeKey> OracleGraph::cutset(const std::vector<Vertex>& side) const {
  std::vector<bool> in(n_, false);
  std::size_t count = 0;
  for (Vertex v : side) {
    if (v >= n_) throw ParameterError("oracle: vertex out of range");
    if (!in[v]) ++count;
    in[v] = true;
  }
  if (count == 0 || count == n_) {
    throw ParameterError("oracle: cut side must be a nonempty proper subset");
  }
  std::vector<EdgeKey> out;
  for (const EdgeKey& e : edges_) {
    if (in[e.x] != in[e.y]) out.push_back(e);
  }
  return out;
}

std::vector<Vertex> OracleGraph::components() const {
  std::vector<Vertex> label(n_);
  for (Vertex v = 0; v < n_; ++v) label[v] = v;
  // Relax until stable; quadratic but transparent.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const EdgeKey& e : edges_) {
      const Vertex m = std::min(label[e.x], label[e.y]);
      if (label[e.x] != m || label[e.y] != m) {
        label[e.x] = label[e.y] = m;
        changed = true;
      }
    }
  }
  return label;
}

}  // namespace dynconn
