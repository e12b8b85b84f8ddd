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

#include "dynconn/harness/workload.h"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynconn/errors.h"
#include "dynconn/hashing.h"

namespace dynconn::harness {

std::optional<WorkloadKind> parse_workload_kind(std::string_view name) {
  if (name == "random-evolve") return WorkloadKind::kRandomEvolve;
  if (name == "path-churn") return WorkloadKind::kPathChurn;
  if (name == "clique-bridge") return WorkloadKind::kCliqueBridge;
  if (name == "mixed") return WorkloadKind::kMixed;
  return std::nullopt;
}

std::string_view workload_name(WorkloadKind kind) {
  switch (kind) {
    case WorkloadKind::kRandomEvolve: return "random-evolve";
    case WorkloadKind::kPathChurn: return "path-churn";
    case WorkloadKind::kCliqueBridge: return "clique-bridge";
    case WorkloadKind::kMixed: return "mixed";
  }
  return "?";
}

std::optional<QueryKind> parse_query_kind(std::string_view name) {
  if (name == "connectivity") return QueryKind::kConnectivity;
  if (name == "two-edge") return QueryKind::kTwoEdge;
  if (name == "both") return QueryKind::kBoth;
  return std::nullopt;
}

void WorkloadParams::validate() const {
  if (n < 2) throw ParameterError("workload needs n >= 2");
  if (n > (std::size_t{1} << 20)) throw ParameterError("workload n too large");
  if (!(insert_prob >= 0.0 && insert_prob <= 1.0)) {
    throw ParameterError("insert_prob must be in [0, 1]");
  }
  if (clique != 0 && (clique < 2 || 2 * clique > n)) {
    throw ParameterError("clique size must be in [2, n / 2]");
  }
}

namespace {

class Builder {
 public:
  Builder(const WorkloadParams& p, std::uint64_t seed)
      : p_(p), rng_(seed), max_edges_(p.n * (p.n - 1) / 2) {
    trace_.n = p.n;
    trace_.ops.reserve(p.updates + p.queries);
  }

  bool done() const { return emitted_ >= p_.updates; }

  void random_step() {
    const bool insert = present_.empty() ||
                        (present_.size() < max_edges_ &&
                         rng_.unit() < p_.insert_prob);
    if (insert) {
      add(random_absent());
    } else {
      remove(present_[rng_.below(present_.size())]);
    }
  }

  // Inserts the path, then repeatedly removes one path edge and closes the
  // path into its rotation at that point.
  void path_churn(std::size_t budget) {
    std::vector<Vertex> path = permutation();
    const std::size_t n = path.size();
    hot_.clear();
    for (std::size_t i = 0; budget > 0 && !done() && i + 1 < n; ++i) {
      const EdgeKey e = EdgeKey::canonical(path[i], path[i + 1]);
      if (!has(e)) {
        add(e);
        --budget;
      }
    }
    while (budget > 0 && !done()) {
      const std::size_t k = 1 + rng_.below(n - 1);
      const EdgeKey gone = EdgeKey::canonical(path[k - 1], path[k]);
      if (has(gone)) {
        remove(gone);
      } else {
        add(gone);
        --budget;
        continue;
      }
      --budget;
      std::rotate(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(k),
                  path.end());
      const EdgeKey join = EdgeKey::canonical(path[n - k - 1], path[n - k]);
      if (budget > 0 && !done() && !has(join)) {
        add(join);
        --budget;
      }
    }
  }

  // Builds two disjoint cliques, then moves the bridge between them: delete
  // the current bridge, insert a fresh one.
  void clique_bridge(std::size_t budget) {
    const std::size_t k = p_.clique != 0 ? p_.clique : std::min<std::size_t>(p_.n / 2, 8);
    const std::vector<Vertex> perm = permutation();
    const std::vector<Vertex> a(perm.begin(), perm.begin() + k);
    const std::vector<Vertex> b(perm.begin() + k, perm.begin() + 2 * k);
    hot_.assign(perm.begin(), perm.begin() + 2 * k);
    for (const auto* side : {&a, &b}) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          if (budget == 0 || done()) return;
          const EdgeKey e = EdgeKey::canonical((*side)[i], (*side)[j]);
          if (!has(e)) {
            add(e);
            --budget;
          }
        }
      }
    }
    std::optional<EdgeKey> bridge;
    while (budget > 0 && !done()) {
      if (bridge && has(*bridge)) {
        remove(*bridge);
        bridge.reset();
      } else {
        const EdgeKey e =
            EdgeKey::canonical(a[rng_.below(k)], b[rng_.below(k)]);
        if (has(e)) {
          remove(e);
        } else {
          add(e);
          bridge = e;
        }
      }
      --budget;
    }
  }

  void drop_hot() { hot_.clear(); }

  Trace finish() {
    while (queries_ < p_.queries) query();
    return std::move(trace_);
  }

 private:
  bool has(EdgeKey e) const { return where_.contains(pack(e)); }

  void add(EdgeKey e) {
    where_.emplace(pack(e), present_.size());
    present_.push_back(e);
    emit({OpKind::kInsert, e.x, e.y});
  }

  void remove(EdgeKey e) {
    const auto it = where_.find(pack(e));
    const std::size_t slot = it->second;
    where_.erase(it);
    if (slot + 1 != present_.size()) {
      present_[slot] = present_.back();
      where_[pack(present_[slot])] = slot;
    }
    present_.pop_back();
    emit({OpKind::kDelete, e.x, e.y});
  }

  EdgeKey random_absent() {
    if (4 * present_.size() < 3 * max_edges_) {
      for (;;) {
        const auto u = static_cast<Vertex>(rng_.below(p_.n));
        const auto v = static_cast<Vertex>(rng_.below(p_.n));
        if (u == v) continue;
        const EdgeKey e = EdgeKey::canonical(u, v);
        if (!has(e)) return e;
      }
    }
    std::vector<EdgeKey> absent;
    for (Vertex u = 0; u < p_.n; ++u) {
      for (Vertex v = u + 1; v < p_.n; ++v) {
        if (!has({u, v})) absent.push_back({u, v});
      }
    }
    return absent[rng_.below(absent.size())];
  }

  std::vector<Vertex> permutation() {
    std::vector<Vertex> perm(p_.n);
    for (Vertex i = 0; i < p_.n; ++i) perm[i] = i;
    for (std::size_t i = p_.n - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng_.below(i + 1)]);
    }
    return perm;
  }

  void emit(Op op) {
    trace_.ops.push_back(op);
    ++emitted_;
    // Queries due after update k: floor(k Q / U) in total.
    const std::size_t due = emitted_ * p_.queries / p_.updates;
    while (queries_ < due) query();
  }

  void query() {
    Vertex u, v;
    if (hot_.size() >= 2 && rng_.below(2) == 0) {
      u = hot_[rng_.below(hot_.size())];
      do {
        v = hot_[rng_.below(hot_.size())];
      } while (v == u);
    } else {
      u = static_cast<Vertex>(rng_.below(p_.n));
      do {
        v = static_cast<Vertex>(rng_.below(p_.n));
      } while (v == u);
    }
    OpKind kind = OpKind::kQuery;
    if (p_.query_kind == QueryKind::kTwoEdge ||
        (p_.query_kind == QueryKind::kBoth && rng_.below(2) == 1)) {
      kind = OpKind::kTwoEdgeQuery;
    }
    trace_.ops.push_back({kind, u, v});
    ++queries_;
  }

  const WorkloadParams& p_;
  SplitMix64 rng_;
  std::size_t max_edges_;
  Trace trace_;
  std::vector<EdgeKey> present_;
  std::unordered_map<std::uint64_t, std::size_t> where_;
  std::vector<Vertex> hot_;
  std::size_t emitted_ = 0;
  std::size_t queries_ = 0;
};

}  // namespace

Trace gen_workload(WorkloadKind kind, const WorkloadParams& params,
                   std::uint64_t seed) {
  params.validate();
  Builder b(params, seed);
  switch (kind) {
    case WorkloadKind::kRandomEvolve:
      while (!b.done()) b.random_step();
      break;
    case WorkloadKind::kPathChurn:
      b.path_churn(params.updates);
      break;
    case WorkloadKind::kCliqueBridge:
      while (!b.done()) b.clique_bridge(params.updates);
      break;
    case WorkloadKind::kMixed: {
      const std::size_t seg =
          params.segment != 0 ? params.segment
                              : std::max<std::size_t>(1, params.updates / 8);
      for (bool clique = false; !b.done(); clique = !clique) {
        if (clique) {
          b.clique_bridge(seg);
        } else {
          b.drop_hot();
          for (std::size_t i = 0; i < seg && !b.done(); ++i) b.random_step();
        }
      }
      break;
    }
  }
  return b.finish();
}

}  // namespace dynconn::harness
