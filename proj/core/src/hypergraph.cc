// Copyright 2026 The hyperdiffuse Authors.
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

#include "hyperdiffuse/hypergraph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

namespace hyperdiffuse {

double splitting_penalty(std::span<const GadgetParams> gadgets, std::size_t in_count,
                         std::size_t edge_size) {
  const double side = static_cast<double>(std::min(in_count, edge_size - in_count));
  if (side == 0.0) return 0.0;
  double total = 0.0;
  for (const GadgetParams& g : gadgets) total += g.c * std::min(side, g.delta);
  return total;
}

Hypergraph::Hypergraph(std::size_t num_nodes, std::vector<std::vector<NodeId>> edges,
                       std::vector<std::vector<GadgetParams>> gadgets)
    : num_nodes_(num_nodes) {
  if (gadgets.size() != edges.size()) {
    throw std::invalid_argument("gadget list count does not match hyperedge count");
  }
  if (num_nodes > std::numeric_limits<NodeId>::max()) {
    throw std::invalid_argument("too many nodes");
  }
  std::vector<std::size_t> incident_count(num_nodes, 0);
  std::vector<char> seen(num_nodes, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& nodes = edges[e];
    if (nodes.size() < 2) {
      throw std::invalid_argument("hyperedge " + std::to_string(e + 1) +
                                  " has fewer than 2 nodes");
    }
    for (NodeId v : nodes) {
      if (v >= num_nodes) {
        throw std::invalid_argument("hyperedge " + std::to_string(e + 1) +
                                    " references node out of range");
      }
      if (seen[v]) {
        for (NodeId u : nodes) seen[u] = 0;
        throw std::invalid_argument("hyperedge " + std::to_string(e + 1) +
                                    " contains a duplicate node");
      }
      seen[v] = 1;
    }
    for (NodeId v : nodes) {
      seen[v] = 0;
      ++incident_count[v];
    }
    if (gadgets[e].empty()) {
      throw std::invalid_argument("hyperedge " + std::to_string(e + 1) + " has no gadget");
    }
    for (const GadgetParams& g : gadgets[e]) {
      if (!(g.c > 0.0) || !std::isfinite(g.c)) {
        throw std::invalid_argument("gadget scale c must be positive");
      }
      if (!(g.delta >= 1.0) || !std::isfinite(g.delta)) {
        throw std::invalid_argument("gadget threshold delta must be >= 1");
      }
    }
  }

  edge_offsets_.reserve(edges.size() + 1);
  gadget_offsets_.reserve(edges.size() + 1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    edge_nodes_.insert(edge_nodes_.end(), edges[e].begin(), edges[e].end());
    edge_offsets_.push_back(edge_nodes_.size());
    max_edge_size_ = std::max(max_edge_size_, edges[e].size());
    for (const GadgetParams& g : gadgets[e]) {
      gadgets_.push_back(g);
      gadget_edge_.push_back(static_cast<EdgeId>(e));
      max_delta_ = std::max(max_delta_, g.delta);
    }
    gadget_offsets_.push_back(gadgets_.size());
  }

  incident_offsets_.assign(num_nodes + 1, 0);
  for (std::size_t v = 0; v < num_nodes; ++v) {
    incident_offsets_[v + 1] = incident_offsets_[v] + incident_count[v];
  }
  incident_.resize(incident_offsets_[num_nodes]);
  std::vector<std::size_t> fill(incident_offsets_.begin(), incident_offsets_.end() - 1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (NodeId v : edges[e]) incident_[fill[v]++] = static_cast<EdgeId>(e);
  }

  degrees_.assign(num_nodes, 0.0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const double single = splitting_penalty(gadgets[e], 1, edges[e].size());
    for (NodeId v : edges[e]) degrees_[v] += single;
  }
  for (double d : degrees_) total_volume_ += d;
}

Hypergraph Hypergraph::uniform(std::size_t num_nodes, std::vector<std::vector<NodeId>> edges,
                               double delta) {
  std::vector<std::vector<GadgetParams>> gadgets(edges.size(), {GadgetParams{1.0, delta}});
  return Hypergraph(num_nodes, std::move(edges), std::move(gadgets));
}

NodeSet::NodeSet(std::vector<NodeId> ids, std::size_t num_nodes) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw std::invalid_argument("node set contains duplicates");
  }
  if (!ids_.empty() && ids_.back() >= num_nodes) {
    throw std::invalid_argument("node set contains an id out of range");
  }
}

NodeSet NodeSet::from_one_based(std::span<const std::int64_t> ids, std::size_t num_nodes) {
  std::vector<NodeId> zero_based;
  zero_based.reserve(ids.size());
  for (std::int64_t id : ids) {
    if (id < 1 || static_cast<std::uint64_t>(id) > num_nodes) {
      throw std::invalid_argument("node id " + std::to_string(id) + " out of range [1, " +
                                  std::to_string(num_nodes) + "]");
    }
    zero_based.push_back(static_cast<NodeId>(id - 1));
  }
  return NodeSet(std::move(zero_based), num_nodes);
}

bool NodeSet::contains(NodeId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::vector<bool> NodeSet::mask(std::size_t num_nodes) const {
  std::vector<bool> m(num_nodes, false);
  for (NodeId v : ids_) m[v] = true;
  return m;
}

SetMetrics set_metrics(const Hypergraph& h, const std::vector<bool>& in_set) {
  SetMetrics out;
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    if (in_set[v]) out.volume += h.degree(v);
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::size_t inside = 0;
    for (NodeId v : h.edge(e)) inside += in_set[v] ? 1 : 0;
    out.cut += splitting_penalty(h.gadgets(e), inside, h.edge_size(e));
  }
  const double denom = std::min(out.volume, h.total_volume() - out.volume);
  out.conductance =
      denom > 0.0 ? out.cut / denom : std::numeric_limits<double>::infinity();
  return out;
}

SetMetrics set_metrics(const Hypergraph& h, const NodeSet& s) {
  return set_metrics(h, s.mask(h.num_nodes()));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("non-numeric token '" + std::string(tok) + "'", line);
  }
  return value;
}

double parse_double(std::string_view tok, std::size_t line) {
  // std::from_chars for double is unavailable on older libstdc++.
  std::string copy(tok);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size() || !std::isfinite(value)) {
    throw ParseError("non-numeric token '" + copy + "'", line);
  }
  return value;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in, const GadgetSource& gadgets) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::int64_t num_nodes = 0;
  std::int64_t num_edges = 0;
  std::vector<std::vector<NodeId>> edges;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '%') continue;
    const auto tokens = split_ws(line);
    if (!have_header) {
      if (tokens.size() != 2) throw ParseError("malformed header", line_no);
      num_nodes = parse_int(tokens[0], line_no);
      num_edges = parse_int(tokens[1], line_no);
      if (num_nodes < 0 || num_edges < 0) throw ParseError("malformed header", line_no);
      if (static_cast<std::uint64_t>(num_nodes) > std::numeric_limits<NodeId>::max()) {
        throw ParseError("malformed header: too many nodes", line_no);
      }
      have_header = true;
      continue;
    }
    if (static_cast<std::int64_t>(edges.size()) == num_edges) {
      throw ParseError("more hyperedges than declared in header", line_no);
    }
    std::vector<NodeId> nodes;
    nodes.reserve(tokens.size());
    for (auto tok : tokens) {
      const std::int64_t id = parse_int(tok, line_no);
      if (id < 1 || id > num_nodes) {
        throw ParseError("node id " + std::to_string(id) + " out of range", line_no);
      }
      nodes.push_back(static_cast<NodeId>(id - 1));
    }
    if (nodes.size() < 2) throw ParseError("hyperedge of size < 2", line_no);
    std::vector<NodeId> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("duplicate node in hyperedge", line_no);
    }
    edges.push_back(std::move(nodes));
  }
  if (!have_header) throw ParseError("malformed header: missing", 0);
  if (static_cast<std::int64_t>(edges.size()) != num_edges) {
    throw ParseError("header declares " + std::to_string(num_edges) + " hyperedges, found " +
                         std::to_string(edges.size()),
                     0);
  }

  if (gadgets.per_edge.empty()) {
    return Hypergraph::uniform(static_cast<std::size_t>(num_nodes), std::move(edges),
                               gadgets.uniform_delta);
  }
  if (gadgets.per_edge.size() != edges.size()) {
    throw ParseError("gadget list count does not match hyperedge count", 0);
  }
  return Hypergraph(static_cast<std::size_t>(num_nodes), std::move(edges), gadgets.per_edge);
}

Hypergraph parse_hypergraph(const std::string& text, const GadgetSource& gadgets) {
  std::istringstream in(text);
  return parse_hypergraph(in, gadgets);
}

std::vector<std::vector<GadgetParams>> parse_gadget_file(std::istream& in,
                                                         std::size_t num_edges) {
  std::vector<std::vector<GadgetParams>> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '%') continue;
    std::vector<GadgetParams> list;
    for (auto tok : split_ws(line)) {
      const auto colon = tok.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("gadget token '" + std::string(tok) + "' is not c:delta", line_no);
      }
      GadgetParams g{parse_double(tok.substr(0, colon), line_no),
                     parse_double(tok.substr(colon + 1), line_no)};
      if (!(g.c > 0.0)) throw ParseError("gadget scale must be positive", line_no);
      if (!(g.delta >= 1.0)) throw ParseError("gadget delta must be >= 1", line_no);
      list.push_back(g);
    }
    out.push_back(std::move(list));
  }
  if (out.size() != num_edges) {
    throw ParseError("gadget file has " + std::to_string(out.size()) + " lines, expected " +
                         std::to_string(num_edges),
                     0);
  }
  return out;
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.num_nodes() << ' ' << h.num_edges() << '\n';
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    bool first = true;
    for (NodeId v : h.edge(e)) {
      if (!first) out << ' ';
      out << (v + 1);
      first = false;
    }
    out << '\n';
  }
}

}  // namespace hyperdiffuse
