// Copyright 2026 The ggap Authors
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

#ifndef GGAP_IO_H_
#define GGAP_IO_H_

#include <string>

#include "json.hpp"

#include "ggap/exact.h"
#include "ggap/filling.h"
#include "ggap/instance.h"
#include "ggap/lemma4.h"
#include "ggap/pipeline.h"

namespace ggap {

// Instance files:
//   {"m": int,
//    "items": [{"id": int, "size": "p/q"}, ...],
//    "groups": [[item id, ...], ...],          (group ids are 1-based positions)
//    "profits": [{"item": id, "bin": 1-based, "value": "p/q"}, ...]}
// Malformed input raises Error(kParse) naming the offending field.
Instance instance_from_json(const nlohmann::json& doc);
// Canonical form: items by id, group members by id, profits by (item, bin)
// with zero entries dropped, rationals in lowest terms.
nlohmann::json instance_to_json(const Instance& inst);

Instance read_instance(const std::string& path);
void write_instance(const Instance& inst, const std::string& path);
std::string render_instance(const Instance& inst);  // canonical text, trailing newline

// Bins as arrays of external item ids, bin order = 1..m.
nlohmann::json assignment_to_json(const Instance& inst, const Assignment& u);
nlohmann::json trace_to_json(const Instance& inst, const FillTrace& trace);
nlohmann::json report_to_json(const Instance& inst, const SolveReport& report);
// Inverse of report_to_json (stage times and the trace included).
SolveReport report_from_json(const Instance& inst, const nlohmann::json& doc);

nlohmann::json lemma4_to_json(const Lemma4Report& report);

}  // namespace ggap

#endif  // GGAP_IO_H_
