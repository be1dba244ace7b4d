// Copyright 2026 The dqc1sim Authors
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

#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

#include "dqc1/circuit.hpp"
#include "dqc1/errors.hpp"

namespace dqc1 {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::size_t parse_uint(const Token& tok, std::size_t line) {
  std::size_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, tok.column,
                     "expected a non-negative integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

std::size_t fixed_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::SWAP:
      return 2;
    case GateKind::CCX:
      return 3;
    case GateKind::MCX:
    case GateKind::MCX0:
      return 0;  // variable
    default:
      return 1;
  }
}

Gate make_gate(GateKind kind, std::vector<Wire> wires) {
  if (kind == GateKind::SWAP) return gates::swap(wires[0], wires[1]);
  Wire target = wires.back();
  wires.pop_back();
  return Gate{kind, std::move(wires), {target}};
}

}  // namespace

CircuitFile parse_circuit_file(std::string_view text) {
  std::optional<std::size_t> wires;
  std::optional<std::size_t> mixed;
  std::optional<std::size_t> measure;
  std::vector<Gate> gate_list;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const Token& head = tokens.front();
    const std::string word = lowercase(head.text);

    if (word == "wires" || word == "mixed" || word == "measure") {
      if (tokens.size() != 2) {
        throw ParseError(line_no, head.column, "'" + word + "' takes exactly one integer");
      }
      if (!gate_list.empty()) {
        throw ParseError(line_no, head.column, "'" + word + "' header after gate lines");
      }
      if (word != "wires" && !wires) {
        throw ParseError(line_no, head.column, "'wires' header must come first");
      }
      auto& slot = word == "wires" ? wires : word == "mixed" ? mixed : measure;
      if (slot) throw ParseError(line_no, head.column, "duplicate '" + word + "' header");
      slot = parse_uint(tokens[1], line_no);
      if (word == "wires" && *wires == 0) {
        throw ParseError(line_no, tokens[1].column, "a circuit needs at least one wire");
      }
      continue;
    }

    const auto kind = kind_from_mnemonic(head.text);
    if (!kind) {
      throw ParseError(line_no, head.column, "unknown gate '" + std::string(head.text) + "'");
    }
    if (!wires) throw ParseError(line_no, head.column, "'wires' header must come first");

    const std::size_t operands = tokens.size() - 1;
    const std::size_t arity = fixed_arity(*kind);
    if (arity != 0 && operands != arity) {
      throw ParseError(line_no, head.column,
                       std::string(mnemonic(*kind)) + " takes " + std::to_string(arity) +
                           " wire(s), got " + std::to_string(operands));
    }
    if (arity == 0 && operands < 2) {
      throw ParseError(line_no, head.column,
                       std::string(mnemonic(*kind)) + " needs at least one control and a target");
    }

    std::vector<Wire> operand_wires;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const Wire w = parse_uint(tokens[i], line_no);
      if (w >= *wires) {
        throw ParseError(line_no, tokens[i].column,
                         "wire " + std::to_string(w) + " out of range for " +
                             std::to_string(*wires) + " wires");
      }
      for (std::size_t j = 0; j < operand_wires.size(); ++j) {
        if (operand_wires[j] == w) {
          throw ParseError(line_no, tokens[i].column, "duplicate wire " + std::to_string(w));
        }
      }
      operand_wires.push_back(w);
    }
    Gate gate = make_gate(*kind, std::move(operand_wires));
    try {
      validate(gate, *wires);
    } catch (const ValidationError& e) {
      throw ParseError(line_no, head.column, e.what());
    }
    gate_list.push_back(std::move(gate));
  }

  if (!wires) throw ParseError(line_no, 1, "missing 'wires' header");
  return CircuitFile{Circuit(*wires, std::move(gate_list)), mixed, measure};
}

Circuit parse_circuit(std::string_view text) { return parse_circuit_file(text).circuit; }

Dqc1Instance to_instance(const CircuitFile& file) {
  return Dqc1Instance(file.circuit, file.mixed.value_or(file.circuit.wires() - 1),
                      file.measure.value_or(1));
}

Dqc1Instance parse_instance(std::string_view text) {
  return to_instance(parse_circuit_file(text));
}

namespace {

void write_gates(std::ostringstream& out, const Circuit& circuit) {
  for (const auto& g : circuit.gates()) {
    out << mnemonic(g.kind);
    for (Wire c : g.controls) out << ' ' << c;
    for (Wire t : g.targets) out << ' ' << t;
    out << '\n';
  }
}

}  // namespace

std::string format_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "wires " << circuit.wires() << '\n';
  write_gates(out, circuit);
  return out.str();
}

std::string format_instance(const Dqc1Instance& instance) {
  std::ostringstream out;
  out << "wires " << instance.circuit().wires() << '\n'
      << "mixed " << instance.mixed_width() << '\n'
      << "measure " << instance.measured_width() << '\n';
  write_gates(out, instance.circuit());
  return out.str();
}

}  // namespace dqc1
