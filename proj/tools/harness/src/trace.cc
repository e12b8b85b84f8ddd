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

#include "dynconn/harness/trace.h"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "dynconn/errors.h"
#include "dynconn/oracle.h"

namespace dynconn::harness {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t number(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || end != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(tok) + "'");
  }
  return value;
}

bool known_kind(char c) {
  return c == 'I' || c == 'D' || c == 'Q' || c == 'B';
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

TraceError::TraceError(std::size_t index, const std::string& what)
    : std::runtime_error("operation " + std::to_string(index) + ": " + what),
      index_(index) {}

std::size_t Trace::update_count() const {
  std::size_t k = 0;
  for (const Op& op : ops) k += op.is_update();
  return k;
}

std::size_t Trace::query_count() const { return ops.size() - update_count(); }

Trace parse_trace(std::istream& in) {
  Trace trace;
  bool have_header = false;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto tok = tokens(raw);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (!have_header) {
      if (tok[0] != "N" || tok.size() != 2) {
        throw ParseError(line, "expected header 'N <n>'");
      }
      trace.n = number(tok[1], line);
      if (trace.n < 2) throw ParseError(line, "n must be at least 2");
      have_header = true;
      continue;
    }
    if (tok[0].size() != 1 || !known_kind(tok[0][0])) {
      throw ParseError(line, "unknown operation '" + std::string(tok[0]) + "'");
    }
    if (tok.size() != 3) {
      throw ParseError(line, "expected '" + std::string(tok[0]) + " <u> <v>'");
    }
    const std::size_t u = number(tok[1], line);
    const std::size_t v = number(tok[2], line);
    if (u >= trace.n || v >= trace.n) {
      throw ParseError(line, "vertex out of range for n = " +
                                 std::to_string(trace.n));
    }
    const auto kind = static_cast<OpKind>(tok[0][0]);
    if (u == v && (kind == OpKind::kInsert || kind == OpKind::kDelete)) {
      throw ParseError(line, "self-loop update");
    }
    trace.ops.push_back({kind, static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_header) throw ParseError(line + 1, "missing header 'N <n>'");
  return trace;
}

Trace parse_trace(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_trace(in);
}

void write_trace(std::ostream& out, const Trace& trace) {
  out << "N " << trace.n << '\n';
  for (const Op& op : trace.ops) {
    out << static_cast<char>(op.kind) << ' ' << op.u << ' ' << op.v << '\n';
  }
}

std::string serialize(const Trace& trace) {
  std::ostringstream out;
  write_trace(out, trace);
  return out.str();
}

void validate_trace(const Trace& trace) {
  if (trace.n < 2) throw TraceError(0, "n must be at least 2");
  OracleGraph g(trace.n);
  for (std::size_t i = 0; i < trace.ops.size(); ++i) {
    const Op& op = trace.ops[i];
    if (op.u >= trace.n || op.v >= trace.n) {
      throw TraceError(i, "vertex out of range");
    }
    if (!op.is_update()) continue;
    if (op.u == op.v) throw TraceError(i, "self-loop update");
    const EdgeKey e = EdgeKey::canonical(op.u, op.v);
    if (op.kind == OpKind::kInsert && g.contains(e)) {
      throw TraceError(i, "insert of present edge");
    }
    if (op.kind == OpKind::kDelete && !g.contains(e)) {
      throw TraceError(i, "delete of absent edge");
    }
    if (op.kind == OpKind::kInsert) {
      g.insert(e);
    } else {
      g.erase(e);
    }
  }
}

}  // namespace dynconn::harness
