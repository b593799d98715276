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

#include "ggap/io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ggap/error.h"

namespace ggap {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::kParse, field + ": " + why);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where + "." + key, "missing");
  return *it;
}

int as_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) parse_fail(field, "expected an integer");
  return v.get<int>();
}

Rational as_rational(const json& v, const std::string& field) {
  if (v.is_string()) return parse_rational(v.get<std::string>(), field);
  if (v.is_number_integer()) return Rational(v.get<long long>());
  parse_fail(field, "expected a \"p/q\" string");
}

int item_index(const Instance& inst, int id, const std::string& field) {
  int index = inst.index_of(id);
  if (index < 0) parse_fail(field, "unknown item id " + std::to_string(id));
  return index;
}

std::vector<int> ids_of(const Instance& inst, std::span<const int> items) {
  std::vector<int> out;
  for (int i : items) out.push_back(inst.item(i).id);
  std::sort(out.begin(), out.end());
  return out;
}

const char* kind_name(FillStepKind kind) {
  switch (kind) {
    case FillStepKind::kNoBig: return "no_big";
    case FillStepKind::kOneBig: return "one_big";
    case FillStepKind::kTwoBigMove: return "two_big_move";
    case FillStepKind::kTwoBigSplit: return "two_big_split";
  }
  return "?";
}

}  // namespace

Instance instance_from_json(const json& doc) {
  const int m = as_int(member(doc, "m", "instance"), "m");
  if (m <= 0) parse_fail("m", "must be positive");

  const json& items_doc = member(doc, "items", "instance");
  if (!items_doc.is_array()) parse_fail("items", "expected an array");
  std::vector<Item> items;
  for (std::size_t k = 0; k < items_doc.size(); ++k) {
    const std::string where = "items[" + std::to_string(k) + "]";
    Item item;
    item.id = as_int(member(items_doc[k], "id", where), where + ".id");
    if (item.id < 0) parse_fail(where + ".id", "must be non-negative");
    item.size = as_rational(member(items_doc[k], "size", where), where + ".size");
    items.push_back(std::move(item));
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.id < b.id; });
  for (std::size_t k = 1; k < items.size(); ++k) {
    if (items[k].id == items[k - 1].id) {
      parse_fail("items", "duplicate id " + std::to_string(items[k].id));
    }
  }
  std::map<int, int> index;
  for (std::size_t k = 0; k < items.size(); ++k) index[items[k].id] = static_cast<int>(k);
  auto lookup = [&](int id, const std::string& field) {
    auto it = index.find(id);
    if (it == index.end()) parse_fail(field, "unknown item id " + std::to_string(id));
    return it->second;
  };

  const json& groups_doc = member(doc, "groups", "instance");
  if (!groups_doc.is_array()) parse_fail("groups", "expected an array");
  std::vector<Group> groups;
  for (std::size_t g = 0; g < groups_doc.size(); ++g) {
    const std::string where = "groups[" + std::to_string(g) + "]";
    if (!groups_doc[g].is_array()) parse_fail(where, "expected an array of item ids");
    Group group{static_cast<int>(g) + 1, {}};
    for (std::size_t k = 0; k < groups_doc[g].size(); ++k) {
      const std::string field = where + "[" + std::to_string(k) + "]";
      group.members.push_back(lookup(as_int(groups_doc[g][k], field), field));
    }
    groups.push_back(std::move(group));
  }

  std::vector<ProfitEntry> profits;
  if (doc.contains("profits")) {
    const json& profits_doc = doc["profits"];
    if (!profits_doc.is_array()) parse_fail("profits", "expected an array");
    for (std::size_t k = 0; k < profits_doc.size(); ++k) {
      const std::string where = "profits[" + std::to_string(k) + "]";
      const json& entry = profits_doc[k];
      ProfitEntry p;
      p.item = lookup(as_int(member(entry, "item", where), where + ".item"), where + ".item");
      p.bin = as_int(member(entry, "bin", where), where + ".bin") - 1;
      if (p.bin < 0 || p.bin >= m) parse_fail(where + ".bin", "must lie in 1..m");
      p.value = as_rational(member(entry, "value", where), where + ".value");
      profits.push_back(std::move(p));
    }
  }
  return Instance(m, std::move(items), std::move(groups), std::move(profits));
}

json instance_to_json(const Instance& inst) {
  json doc;
  doc["m"] = inst.bins();
  json items = json::array();
  for (const auto& item : inst.items()) {
    items.push_back({{"id", item.id}, {"size", to_string(item.size)}});
  }
  doc["items"] = std::move(items);
  json groups = json::array();
  for (const auto& group : inst.groups()) groups.push_back(ids_of(inst, group.members));
  doc["groups"] = std::move(groups);
  json profits = json::array();
  for (const auto& e : inst.profit_entries()) {
    profits.push_back(
        {{"item", inst.item(e.item).id}, {"bin", e.bin + 1}, {"value", to_string(e.value)}});
  }
  doc["profits"] = std::move(profits);
  return doc;
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, path + ": cannot open");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
  return instance_from_json(doc);
}

std::string render_instance(const Instance& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

void write_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, path + ": cannot write");
  out << render_instance(inst);
}

json assignment_to_json(const Instance& inst, const Assignment& u) {
  json bins = json::array();
  for (const auto& b : u.bins) bins.push_back(ids_of(inst, b));
  return bins;
}

json trace_to_json(const Instance& inst, const FillTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    std::vector<int> bins;
    for (int b : s.bins) bins.push_back(b + 1);
    steps.push_back({{"step", static_cast<int>(s.kind)},
                     {"kind", kind_name(s.kind)},
                     {"bins", bins},
                     {"evicted", ids_of(inst, s.evicted)},
                     {"profit_before", to_string(s.profit_before)},
                     {"profit_after", to_string(s.profit_after)}});
  }
  json reinserted = json::array();
  for (const auto& r : trace.reinsertions) {
    reinserted.push_back({{"item", inst.item(r.item).id}, {"bin", r.bin + 1}});
  }
  return {{"steps", steps},
          {"reinserted", reinserted},
          {"full_before_split", trace.full_before_split},
          {"semi_vacant_before_split", trace.semi_vacant_before_split}};
}

json report_to_json(const Instance& inst, const SolveReport& r) {
  const Certificates& c = r.certificates;
  json doc;
  std::vector<int> group_ids;
  for (int g : r.selected_groups) group_ids.push_back(inst.group(g).id);
  doc["selected_groups"] = group_ids;
  doc["selected_size"] = to_string(r.selected_size);
  doc["psi"] = to_string(r.psi_value);
  doc["fractional_value"] = to_string(r.fractional_value);
  doc["rounded_profit"] = to_string(r.rounded_profit);
  doc["final_profit"] = to_string(r.final_profit);
  doc["satisfied_profit"] = to_string(r.satisfied_profit);
  doc["upper_bound"] = to_string(r.upper_bound);
  doc["certificates"] = {
      {"selection_within_half", c.selection_within_half},
      {"fractional_realizes_psi", c.fractional_realizes_psi},
      {"rounded_almost_feasible", c.rounded_almost_feasible},
      {"rounded_dominates_fractional", c.rounded_dominates_fractional},
      {"final_feasible", c.final_feasible},
      {"final_packs_selection", c.final_packs_selection},
      {"final_at_least_half_rounded", c.final_at_least_half_rounded},
      {"final_at_least_half_psi", c.final_at_least_half_psi},
      {"all", c.all()},
  };
  doc["times_ms"] = {{"select", r.times.select_ms},
                     {"lp", r.times.lp_ms},
                     {"round", r.times.round_ms},
                     {"fill", r.times.fill_ms}};
  doc["fill_trace"] = trace_to_json(inst, r.fill_trace);
  return doc;
}

SolveReport report_from_json(const Instance& inst, const json& doc) {
  auto rational = [&](const char* key) {
    return as_rational(member(doc, key, "report"), std::string("report.") + key);
  };
  SolveReport r;
  for (const auto& g : member(doc, "selected_groups", "report")) {
    const int id = g.get<int>();
    int index = -1;
    for (int k = 0; k < inst.num_groups(); ++k) {
      if (inst.group(k).id == id) index = k;
    }
    if (index < 0) parse_fail("report.selected_groups", "unknown group " + std::to_string(id));
    r.selected_groups.push_back(index);
  }
  r.selected_size = rational("selected_size");
  r.psi_value = rational("psi");
  r.fractional_value = rational("fractional_value");
  r.rounded_profit = rational("rounded_profit");
  r.final_profit = rational("final_profit");
  r.satisfied_profit = rational("satisfied_profit");
  r.upper_bound = rational("upper_bound");
  const json& c = member(doc, "certificates", "report");
  Certificates& out = r.certificates;
  out.selection_within_half = c.at("selection_within_half");
  out.fractional_realizes_psi = c.at("fractional_realizes_psi");
  out.rounded_almost_feasible = c.at("rounded_almost_feasible");
  out.rounded_dominates_fractional = c.at("rounded_dominates_fractional");
  out.final_feasible = c.at("final_feasible");
  out.final_packs_selection = c.at("final_packs_selection");
  out.final_at_least_half_rounded = c.at("final_at_least_half_rounded");
  out.final_at_least_half_psi = c.at("final_at_least_half_psi");
  const json& t = member(doc, "times_ms", "report");
  r.times = {t.at("select"), t.at("lp"), t.at("round"), t.at("fill")};
  const json& trace = member(doc, "fill_trace", "report");
  for (const auto& s : trace.at("steps")) {
    FillStep step;
    step.kind = static_cast<FillStepKind>(s.at("step").get<int>());
    for (int b : s.at("bins")) step.bins.push_back(b - 1);
    for (int id : s.at("evicted")) step.evicted.push_back(item_index(inst, id, "evicted"));
    step.profit_before = as_rational(s.at("profit_before"), "profit_before");
    step.profit_after = as_rational(s.at("profit_after"), "profit_after");
    r.fill_trace.steps.push_back(std::move(step));
  }
  for (const auto& e : trace.at("reinserted")) {
    r.fill_trace.reinsertions.push_back(
        {item_index(inst, e.at("item"), "reinserted.item"), e.at("bin").get<int>() - 1});
  }
  r.fill_trace.full_before_split = trace.at("full_before_split");
  r.fill_trace.semi_vacant_before_split = trace.at("semi_vacant_before_split");
  return r;
}

json lemma4_to_json(const Lemma4Report& report) {
  return {{"step", report.step},
          {"min", report.min_value},
          {"argmin",
           {{"p1", report.argmin[0]},
            {"p2", report.argmin[1]},
            {"S1", report.argmin[2]},
            {"S2", report.argmin[3]}}},
          {"evaluated", report.evaluated},
          {"skipped", report.skipped},
          {"pass", report.pass}};
}

}  // namespace ggap
