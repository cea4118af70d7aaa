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


#include "io.h"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace hyperdiffuse::cli {

namespace fs = std::filesystem;

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  return in;
}

std::ofstream open_output(const fs::path& path, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

Hypergraph load_graph(const fs::path& graph, const fs::path& gadgets, double delta) {
  std::ifstream in = open_input(graph);
  try {
    GadgetSource source;
    source.uniform_delta = delta;
    if (gadgets.empty()) return parse_hypergraph(in, source);
    // The edge count is needed to validate the sidecar, so read the header first.
    std::stringstream text;
    text << in.rdbuf();
    const Hypergraph plain = parse_hypergraph(text.str(), source);
    std::ifstream side = open_input(gadgets);
    source.per_edge = parse_gadget_file(side, plain.num_edges());
    return parse_hypergraph(text.str(), source);
  } catch (const ParseError& e) {
    throw IoError(graph.string() + ": " + e.what());
  }
}

NodeSet load_node_set(const fs::path& path, std::size_t num_nodes) {
  std::ifstream in = open_input(path);
  std::vector<std::int64_t> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '%' || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      std::size_t used = 0;
      std::int64_t id = 0;
      try {
        id = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw IoError(path.string() + ":" + std::to_string(line_no) + ": bad node id '" + tok +
                      "'");
      }
      ids.push_back(id);
    }
  }
  try {
    return NodeSet::from_one_based(ids, num_nodes);
  } catch (const std::invalid_argument& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

std::vector<std::pair<NodeId, double>> load_solution(const fs::path& path,
                                                     std::size_t num_nodes) {
  std::ifstream in = open_input(path);
  std::vector<std::pair<NodeId, double>> x;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || (line_no == 1 && line == "node_id,x")) continue;
    const auto comma = line.find(',');
    auto bad = [&] {
      return IoError(path.string() + ":" + std::to_string(line_no) + ": expected node_id,x");
    };
    if (comma == std::string::npos) throw bad();
    std::int64_t id = 0;
    double value = 0.0;
    try {
      std::size_t used = 0;
      id = std::stoll(line.substr(0, comma), &used);
      if (used != comma) throw bad();
      const std::string rest = line.substr(comma + 1);
      value = std::stod(rest, &used);
      if (used != rest.size()) throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
    if (id < 1 || static_cast<std::uint64_t>(id) > num_nodes) {
      throw IoError(path.string() + ":" + std::to_string(line_no) + ": node id out of range");
    }
    x.emplace_back(static_cast<NodeId>(id - 1), value);
  }
  return x;
}

void write_solution(std::ostream& out, std::vector<std::pair<NodeId, double>> x) {
  std::erase_if(x, [](const auto& e) { return !(e.second > 0.0); });
  std::sort(x.begin(), x.end(), [](const auto& l, const auto& r) {
    return l.second != r.second ? l.second > r.second : l.first < r.first;
  });
  const auto old = out.precision(17);
  out << "node_id,x\n";
  for (const auto& [v, xv] : x) out << v + 1 << ',' << xv << '\n';
  out.precision(old);
}

void write_node_set(std::ostream& out, const NodeSet& s) {
  for (NodeId v : s) out << v + 1 << '\n';
}

}  // namespace hyperdiffuse::cli
