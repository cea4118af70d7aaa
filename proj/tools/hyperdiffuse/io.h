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


// File helpers shared by the subcommands. Node ids in every file are
// 1-based; they are 0-based everywhere in memory.

#ifndef HYPERDIFFUSE_TOOLS_IO_H_
#define HYPERDIFFUSE_TOOLS_IO_H_

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperdiffuse/hypergraph.h"

namespace hyperdiffuse::cli {

// Unreadable or unwritable path, or a malformed input file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::filesystem::path& path);
std::ofstream open_output(const std::filesystem::path& path,
                          std::ios::openmode mode = std::ios::out);

// `gadgets` may be empty, in which case every hyperedge gets (1, delta).
Hypergraph load_graph(const std::filesystem::path& graph, const std::filesystem::path& gadgets,
                      double delta);

// Whitespace-separated 1-based ids; '%' and '#' start comment lines.
NodeSet load_node_set(const std::filesystem::path& path, std::size_t num_nodes);

// CSV with header "node_id,x".
std::vector<std::pair<NodeId, double>> load_solution(const std::filesystem::path& path,
                                                     std::size_t num_nodes);

// Positive entries sorted by decreasing x, ties by id.
void write_solution(std::ostream& out, std::vector<std::pair<NodeId, double>> x);

void write_node_set(std::ostream& out, const NodeSet& s);

}  // namespace hyperdiffuse::cli

#endif  // HYPERDIFFUSE_TOOLS_IO_H_
