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

#ifndef DYNCONN_HARNESS_TRACE_H_
#define DYNCONN_HARNESS_TRACE_H_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dynconn/edge_key.h"

namespace dynconn::harness {

enum class OpKind : char {
  kInsert = 'I',
  kDelete = 'D',
  kQuery = 'Q',         // connectivity
  kTwoEdgeQuery = 'B',  // 2-edge connectivity
};

struct Op {
  OpKind kind;
  Vertex u;
  Vertex v;

  bool is_update() const {
    return kind == OpKind::kInsert || kind == OpKind::kDelete;
  }
  friend bool operator==(const Op&, const Op&) = default;
};

struct Trace {
  std::size_t n = 0;
  std::vector<Op> ops;

  std::size_t update_count() const;
  std::size_t query_count() const;
  friend bool operator==(const Trace&, const Trace&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Rejected trace: the operation at `index` (0-based) is not applicable.
class TraceError : public std::runtime_error {
 public:
  TraceError(std::size_t index, const std::string& what);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Line format: "N <n>" header, then "I u v", "D u v", "Q u v" or "B u v".
// Blank lines and lines starting with '#' are skipped.
Trace parse_trace(std::istream& in);
Trace parse_trace(std::string_view text);

void write_trace(std::ostream& out, const Trace& trace);
std::string serialize(const Trace& trace);

// Replays the updates on an oracle graph. Throws TraceError on the first
// duplicate insert or absent delete.
void validate_trace(const Trace& trace);

}  // namespace dynconn::harness

#endif  // DYNCONN_HARNESS_TRACE_H_
