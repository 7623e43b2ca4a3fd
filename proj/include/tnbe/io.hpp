// Copyright 2026 The tnbe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON documents for networks, QUBOs, compilation results and reports.
// Malformed input raises Error(parse) naming the line/column or field path.

#ifndef TNBE_IO_HPP
#define TNBE_IO_HPP

#include <string>

#include <json.hpp>

#include "tnbe/network.hpp"
#include "tnbe/qubo.hpp"
#include "tnbe/report.hpp"
#include "tnbe/sweep.hpp"
#include "tnbe/verify.hpp"

namespace tnbe {

using json = nlohmann::json;

/// Parses text; `source` prefixes diagnostics (usually the file name).
json parse_json(const std::string &text, const std::string &source = "<input>");
json read_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

TensorNetwork network_from_json(const json &j, const std::string &source = "<network>");
json network_to_json(const TensorNetwork &tn);

Qubo qubo_from_json(const json &j, const std::string &source = "<qubo>");
json qubo_to_json(const Qubo &q);

CompilationResult result_from_json(const json &j, const std::string &source = "<result>");
json result_to_json(const CompilationResult &r);

json verification_to_json(const VerificationReport &r);
json report_to_json(const ResourceReport &r);
json slot_plan_to_json(const SlotPlan &plan);

/// Serialized forms: results are compact, everything else is indented.
std::string dump_network(const TensorNetwork &tn);
std::string dump_result(const CompilationResult &r);

TensorNetwork read_network(const std::string &path);
CompilationResult read_result(const std::string &path);
Qubo read_qubo(const std::string &path);

} // namespace tnbe

#endif // TNBE_IO_HPP
