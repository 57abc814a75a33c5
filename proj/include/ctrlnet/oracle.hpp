// Copyright 2026 The ctrlnet Authors.
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

#ifndef CTRLNET_ORACLE_HPP_
#define CTRLNET_ORACLE_HPP_

#include <stdexcept>
#include <vector>

#include "ctrlnet/graph.hpp"
#include "ctrlnet/input_graph.hpp"

namespace ctrlnet {

// Exhaustive ground truth. Independent of the matching and input-graph
// modules: it finds the matching number by branch and bound and then lists
// every maximum matching by backtracking.

struct OracleGuard {
  std::size_t max_nodes = 16;
  std::size_t max_count = 1'000'000;
  bool keep_matchings = false;
};

class OracleInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationResult {
  std::size_t matching_size = 0;
  std::size_t matching_count = 0;
  std::vector<std::vector<NodeId>> mis_list;  // distinct, sorted
  std::vector<char> in_some_mis;
  std::vector<char> in_all_mis;
  // Only filled when OracleGuard::keep_matchings is set.
  std::vector<std::vector<Edge>> matchings;
};

EnumerationResult enumerate_maximum_matchings(const DirectedNetwork& net,
                                              const OracleGuard& guard = {});

// PossibleInput iff in some MIS, critical iff in all of them. Throws
// InvariantViolation if "in all MISs" disagrees with zero in-degree.
std::vector<NodeClass> classify_exhaustive(const DirectedNetwork& net,
                                           const OracleGuard& guard = {});

}  // namespace ctrlnet

#endif  // CTRLNET_ORACLE_HPP_
