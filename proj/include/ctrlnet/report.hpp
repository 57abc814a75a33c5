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

#ifndef CTRLNET_REPORT_HPP_
#define CTRLNET_REPORT_HPP_

#include <ostream>
#include <string>

#include <json.hpp>

#include "ctrlnet/alteration.hpp"
#include "ctrlnet/analysis.hpp"
#include "ctrlnet/graph.hpp"

namespace ctrlnet {

// Fraction as a percentage rounded half away from zero to two decimals.
double percent2(double fraction);
// Six significant digits.
double ratio6(double value);
std::string format_ratio(double value);
std::string format_percent(double fraction);  // "66.67"

std::string_view class_name(const NodeClass& c);  // possible_input/critical/redundant

struct ReportOptions {
  bool members = false;  // node-level lists (classes, MIS labels, matching)
};

// Member lists are dropped by default above this many nodes.
inline constexpr std::size_t kMemberListLimit = 10'000;

nlohmann::json analysis_json(const DirectedNetwork& net, const Analysis& a,
                             const ReportOptions& opts);
nlohmann::json components_json(const DirectedNetwork& net, const Analysis& a,
                               const ReportOptions& opts);
nlohmann::json plan_json(const DirectedNetwork& net, const AlterationPlan& plan);

// TSV views.
void write_classes_tsv(const DirectedNetwork& net, const Analysis& a, std::ostream& out);
void write_components_tsv(const DirectedNetwork& net, const Analysis& a,
                          const ReportOptions& opts, std::ostream& out);
void write_input_graph_tsv(const DirectedNetwork& net, const InputGraph& ig,
                           std::ostream& out);
void write_additions_tsv(const DirectedNetwork& net, const AlterationPlan& plan,
                         std::ostream& out);
void write_analysis_tsv(const Analysis& a, std::ostream& out);

}  // namespace ctrlnet

#endif  // CTRLNET_REPORT_HPP_
