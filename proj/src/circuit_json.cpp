// Copyright 2026 The limprep developers
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

#include "limprep/circuit_json.hpp"

#include <json.hpp>

namespace limprep {

namespace {

using nlohmann::json;

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::PauliX:
      return "x";
    case GateKind::PauliZ:
      return "z";
    case GateKind::Unitary2:
      return "unitary2";
    case GateKind::Phase:
      return "phase";
  }
  return "";
}

GateKind kind_from_name(const std::string& s) {
  if (s == "x") return GateKind::PauliX;
  if (s == "z") return GateKind::PauliZ;
  if (s == "unitary2") return GateKind::Unitary2;
  if (s == "phase") return GateKind::Phase;
  throw ContractViolation("unknown gate kind: " + s);
}

}  // namespace

std::string export_json(const Circuit& c) {
  json doc;
  doc["num_qubits"] = c.num_qubits;
  doc["ancilla"] = c.ancilla ? json(*c.ancilla) : json(nullptr);
  json gates = json::array();
  for (const Gate& g : c.gates) {
    json jg;
    jg["kind"] = kind_name(g.kind);
    json controls = json::array();
    for (const Control& ctl : g.controls) {
      controls.push_back(json::array(
          {ctl.qubit, ctl.polarity == Polarity::pos ? "pos" : "neg"}));
    }
    jg["controls"] = std::move(controls);
    jg["target"] = g.target;
    json params = json::array();
    if (g.kind == GateKind::Unitary2) {
      for (const Complex& e : {g.matrix.m00, g.matrix.m01, g.matrix.m10, g.matrix.m11}) {
        params.push_back(e.real());
        params.push_back(e.imag());
      }
    } else if (g.kind == GateKind::Phase) {
      params.push_back(g.angle);
    }
    jg["params"] = std::move(params);
    gates.push_back(std::move(jg));
  }
  doc["gates"] = std::move(gates);
  return doc.dump(2) + "\n";
}

Circuit import_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what(), e.byte);
  }
  try {
    Circuit c;
    c.num_qubits = doc.at("num_qubits").get<std::uint32_t>();
    if (!doc.at("ancilla").is_null()) {
      c.ancilla = doc.at("ancilla").get<std::uint32_t>();
    }
    for (const json& jg : doc.at("gates")) {
      Gate g;
      g.kind = kind_from_name(jg.at("kind").get<std::string>());
      g.target = jg.at("target").get<std::uint32_t>();
      for (const json& jc : jg.at("controls")) {
        const auto pol = jc.at(1).get<std::string>();
        if (pol != "pos" && pol != "neg") {
          throw ContractViolation("control polarity must be \"pos\" or \"neg\"");
        }
        g.controls.push_back(
            Control{jc.at(0).get<std::uint32_t>(), pol == "pos" ? Polarity::pos : Polarity::neg});
      }
      const json& params = jg.at("params");
      switch (g.kind) {
        case GateKind::Unitary2: {
          if (params.size() != 8) {
            throw ContractViolation("unitary2 gate needs 8 numeric params");
          }
          Complex e[4];
          for (int i = 0; i < 4; ++i) {
            e[i] = Complex{params.at(2 * i).get<double>(), params.at(2 * i + 1).get<double>()};
          }
          g.matrix = Mat2{e[0], e[1], e[2], e[3]};
          break;
        }
        case GateKind::Phase:
          if (params.size() != 1) {
            throw ContractViolation("phase gate needs 1 numeric param");
          }
          g.angle = params.at(0).get<double>();
          break;
        default:
          break;
      }
      // Re-run construction checks (distinct controls, unitarity).
      Gate checked = (g.kind == GateKind::Unitary2) ? make_unitary(g.target, g.matrix, g.controls)
                     : (g.kind == GateKind::Phase)  ? make_phase(g.target, g.angle, g.controls)
                     : (g.kind == GateKind::PauliX) ? make_x(g.target, g.controls)
                                                    : make_z(g.target, g.controls);
      c.add(std::move(checked));
    }
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("circuit JSON schema error: ") + e.what());
  }
}

}  // namespace limprep
