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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ggap/error.h"
#include "ggap/exact.h"
#include "ggap/generator.h"
#include "ggap/io.h"
#include "ggap/lemma4.h"
#include "ggap/lp_oracle.h"
#include "ggap/pipeline.h"

namespace py = pybind11;

namespace {

py::object fraction(const ggap::Rational& value) {
  return py::module_::import("fractions").attr("Fraction")(ggap::to_string(value));
}

py::object from_json(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

std::vector<int> item_indices(const ggap::Instance& inst, const std::vector<int>& ids) {
  std::vector<int> out;
  for (int id : ids) {
    const int index = inst.index_of(id);
    if (index < 0) {
      throw ggap::Error(ggap::ErrorCode::kParse, "unknown item id " + std::to_string(id));
    }
    out.push_back(index);
  }
  return ggap::normalize_subset(std::move(out));
}

std::vector<int> group_indices(const ggap::Instance& inst, const std::vector<int>& ids) {
  std::vector<int> out;
  for (int id : ids) {
    if (id < 1 || id > inst.num_groups()) {
      throw ggap::Error(ggap::ErrorCode::kParse, "unknown group " + std::to_string(id));
    }
    out.push_back(id - 1);
  }
  return ggap::normalize_subset(std::move(out));
}

std::vector<int> all_groups(const ggap::Instance& inst) {
  std::vector<int> out;
  for (int g = 1; g <= inst.num_groups(); ++g) out.push_back(g);
  return out;
}

py::dict solve(const ggap::Instance& inst, int k) {
  ggap::SolveResult result = ggap::solve(inst, {k});
  py::dict out = from_json(ggap::report_to_json(inst, result.report));
  for (const char* key : {"selected_size", "psi", "fractional_value", "rounded_profit",
                          "final_profit", "satisfied_profit", "upper_bound"}) {
    out[key] = py::module_::import("fractions").attr("Fraction")(out[key]);
  }
  out["assignment"] = from_json(ggap::assignment_to_json(inst, result.assignment));
  out["rounded"] = from_json(ggap::assignment_to_json(inst, result.rounded));
  return out;
}

}  // namespace

PYBIND11_MODULE(ggap, m) {
  m.doc() = "Group generalized assignment: approximation pipeline and exact oracles";

  static py::exception<ggap::Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ggap::Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<ggap::Instance>(m, "Instance")
      .def_static(
          "from_json",
          [](const std::string& text) {
            return ggap::instance_from_json(nlohmann::json::parse(text));
          },
          py::arg("text"))
      .def_static("read", &ggap::read_instance, py::arg("path"))
      .def("to_json", &ggap::render_instance)
      .def("write", [](const ggap::Instance& inst, const std::string& path) {
        ggap::write_instance(inst, path);
      })
      .def_property_readonly("bins", &ggap::Instance::bins)
      .def_property_readonly("num_items", &ggap::Instance::num_items)
      .def_property_readonly("num_groups", &ggap::Instance::num_groups)
      .def("__repr__", [](const ggap::Instance& inst) {
        return "<ggap.Instance m=" + std::to_string(inst.bins()) +
               " items=" + std::to_string(inst.num_items()) +
               " groups=" + std::to_string(inst.num_groups()) + ">";
      });

  m.def(
      "validate",
      [](const ggap::Instance& inst, bool strict) { ggap::validate_instance(inst, strict); },
      py::arg("instance"), py::arg("strict") = true);

  m.def("solve", &solve, py::arg("instance"), py::arg("k") = 6,
        "Run the pipeline; returns the report as a dict with Fraction values.");

  m.def(
      "phi",
      [](const ggap::Instance& inst, const std::vector<int>& item_ids) {
        return fraction(ggap::phi(inst, item_indices(inst, item_ids)));
      },
      py::arg("instance"), py::arg("items"));

  m.def(
      "psi",
      [](const ggap::Instance& inst, std::optional<std::vector<int>> group_ids) {
        const auto ids = group_ids ? *group_ids : all_groups(inst);
        return fraction(ggap::psi(inst, group_indices(inst, ids)));
      },
      py::arg("instance"), py::arg("groups") = py::none());

  m.def(
      "upper_bound",
      [](const ggap::Instance& inst) { return fraction(ggap::upper_bound(inst)); },
      py::arg("instance"));

  m.def(
      "exact",
      [](const ggap::Instance& inst) {
        ggap::ExactResult r = ggap::exact_group_gap(inst);
        py::dict out;
        out["optimum"] = fraction(r.optimum);
        out["assignment"] = from_json(ggap::assignment_to_json(inst, r.witness));
        out["nodes"] = r.nodes;
        return out;
      },
      py::arg("instance"));

  m.def("lemma4_h", &ggap::lemma4_h, py::arg("p_a"), py::arg("p_b"), py::arg("s_a"),
        py::arg("s_b"), py::arg("k") = 6);

  m.def(
      "lemma4_grid_check",
      [](double step, int k) { return from_json(ggap::lemma4_to_json(ggap::lemma4_grid_check(step, k))); },
      py::arg("step") = 1.0 / 64, py::arg("k") = 6);

  m.def(
      "generate",
      [](std::uint64_t seed, int items, int groups, int bins, const std::string& flavor,
         int denominator, int max_profit, const std::string& delta) {
        ggap::GeneratorSpec spec;
        spec.seed = seed;
        spec.items = items;
        spec.groups = groups;
        spec.bins = bins;
        spec.flavor = ggap::parse_flavor(flavor);
        spec.size_denominator = denominator;
        spec.max_profit = max_profit;
        spec.delta = ggap::parse_rational(delta, "delta");
        return ggap::generate_instance(spec);
      },
      py::arg("seed"), py::arg("items"), py::arg("groups"), py::arg("bins"),
      py::arg("flavor") = "uniform", py::arg("denominator") = 16, py::arg("max_profit") = 20,
      py::arg("delta") = "1/2");
}
