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

#ifndef HYPERDIFFUSE_HYPERGRAPH_H_
#define HYPERDIFFUSE_HYPERGRAPH_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperdiffuse {

// Dense 0-based indices. Files use 1-based ids; the mapping is a plain shift.
using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
using GadgetId = std::uint32_t;

// Raised for malformed .hgr / sidecar input. `line()` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// One directed gadget of a cardinality-based splitting function:
//   f(A) = c * min{|A|, |e \ A|, delta}.
struct GadgetParams {
  double c = 1.0;
  double delta = 1.0;

  friend bool operator==(const GadgetParams&, const GadgetParams&) = default;
};

// Sum over gadgets of c_j * min{in_count, edge_size - in_count, delta_j}.
double splitting_penalty(std::span<const GadgetParams> gadgets, std::size_t in_count,
                         std::size_t edge_size);

/**
 * Immutable hypergraph with per-hyperedge gadget lists.
 *
 * Storage is CSR in both directions (edge -> nodes, node -> edges) plus a
 * flat gadget array indexed by GadgetId; gadgets of edge e occupy the
 * contiguous range gadget_range(e). Degrees are d_i = sum over incident
 * edges of f_e({i}).
 */
class Hypergraph {
 public:
  Hypergraph() = default;

  // `edges` holds 0-based node ids; `gadgets[e]` must be non-empty.
  Hypergraph(std::size_t num_nodes, std::vector<std::vector<NodeId>> edges,
             std::vector<std::vector<GadgetParams>> gadgets);

  // Every hyperedge gets the single gadget (c = 1, delta).
  static Hypergraph uniform(std::size_t num_nodes, std::vector<std::vector<NodeId>> edges,
                            double delta);

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_edges() const { return edge_offsets_.size() - 1; }
  std::size_t num_gadgets() const { return gadgets_.size(); }
  std::size_t max_edge_size() const { return max_edge_size_; }

  std::span<const NodeId> edge(EdgeId e) const {
    return {edge_nodes_.data() + edge_offsets_[e], edge_offsets_[e + 1] - edge_offsets_[e]};
  }
  std::size_t edge_size(EdgeId e) const { return edge_offsets_[e + 1] - edge_offsets_[e]; }

  std::span<const EdgeId> incident_edges(NodeId v) const {
    return {incident_.data() + incident_offsets_[v],
            incident_offsets_[v + 1] - incident_offsets_[v]};
  }

  std::span<const GadgetParams> gadgets(EdgeId e) const {
    return {gadgets_.data() + gadget_offsets_[e], gadget_offsets_[e + 1] - gadget_offsets_[e]};
  }
  GadgetId first_gadget(EdgeId e) const { return gadget_offsets_[e]; }
  const GadgetParams& gadget(GadgetId g) const { return gadgets_[g]; }
  EdgeId gadget_edge(GadgetId g) const { return gadget_edge_[g]; }

  double degree(NodeId v) const { return degrees_[v]; }
  std::span<const double> degrees() const { return degrees_; }
  double total_volume() const { return total_volume_; }

  // Largest gadget delta in the hypergraph (1 if there are no gadgets).
  double max_delta() const { return max_delta_; }

 private:
  std::size_t num_nodes_ = 0;
  std::size_t max_edge_size_ = 0;
  std::vector<std::size_t> edge_offsets_{0};
  std::vector<NodeId> edge_nodes_;
  std::vector<std::size_t> incident_offsets_{0};
  std::vector<EdgeId> incident_;
  std::vector<std::size_t> gadget_offsets_{0};
  std::vector<GadgetParams> gadgets_;
  std::vector<EdgeId> gadget_edge_;
  std::vector<double> degrees_;
  double total_volume_ = 0.0;
  double max_delta_ = 1.0;
};

// A set of nodes held as sorted, duplicate-free 0-based ids.
class NodeSet {
 public:
  NodeSet() = default;

  // Validates range against `num_nodes` and rejects duplicates.
  NodeSet(std::vector<NodeId> ids, std::size_t num_nodes);
  NodeSet(std::initializer_list<NodeId> ids, std::size_t num_nodes)
      : NodeSet(std::vector<NodeId>(ids), num_nodes) {}

  // Builds from 1-based ids as they appear in files.
  static NodeSet from_one_based(std::span<const std::int64_t> ids, std::size_t num_nodes);

  std::span<const NodeId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(NodeId v) const;

  // Membership bitmap of length num_nodes.
  std::vector<bool> mask(std::size_t num_nodes) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> ids_;
};

struct SetMetrics {
  double cut = 0.0;
  double volume = 0.0;
  double conductance = 0.0;  // +inf when min(vol(S), vol(V \ S)) == 0
};

SetMetrics set_metrics(const Hypergraph& h, const NodeSet& s);

// Same computation from a membership bitmap (length num_nodes).
SetMetrics set_metrics(const Hypergraph& h, const std::vector<bool>& in_set);

// Uniform gadget assignment (c = 1, delta) or one list per hyperedge.
struct GadgetSource {
  double uniform_delta = 1.0;
  std::vector<std::vector<GadgetParams>> per_edge;  // empty => uniform
};

// Reads the .hgr text format:
//   line 1: <num_nodes> <num_hyperedges>
//   then one hyperedge per non-empty line, 1-based node ids.
// Lines starting with '%' are comments; CRLF is accepted.
Hypergraph parse_hypergraph(std::istream& in, const GadgetSource& gadgets = {});
Hypergraph parse_hypergraph(const std::string& text, const GadgetSource& gadgets = {});

// Sidecar gadget file: one line per hyperedge, tokens "c:delta".
std::vector<std::vector<GadgetParams>> parse_gadget_file(std::istream& in,
                                                         std::size_t num_edges);

void write_hypergraph(std::ostream& out, const Hypergraph& h);

}  // namespace hyperdiffuse

#endif  // HYPERDIFFUSE_HYPERGRAPH_H_
