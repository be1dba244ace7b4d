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

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dqc1/circuit.hpp"
#include "dqc1/errors.hpp"

// Dense linear algebra for the simulators. Basis index bit k holds wire k.

namespace dqc1 {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using StateVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using DensityMatrix = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Operator = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Complex<Scalar>, 2, 2>;

using StateVectorXd = StateVector<double>;
using DensityMatrixXd = DensityMatrix<double>;
using OperatorXd = Operator<double>;

inline constexpr std::size_t dimension(std::size_t wires) { return std::size_t{1} << wires; }

/// The 2x2 operator a gate applies to its target once its controls fire.
/// Not defined for SWAP.
template <typename Scalar>
Matrix2<Scalar> target_matrix(GateKind kind) {
  using C = Complex<Scalar>;
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  Matrix2<Scalar> m;
  switch (kind) {
    case GateKind::H: m << C(r), C(r), C(r), C(-r); break;
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX:
    case GateKind::MCX0: m << C(0), C(1), C(1), C(0); break;
    case GateKind::Y: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case GateKind::Z:
    case GateKind::CZ: m << C(1), C(0), C(0), C(-1); break;
    case GateKind::S: m << C(1), C(0), C(0), C(0, 1); break;
    case GateKind::Sdg: m << C(1), C(0), C(0), C(0, -1); break;
    case GateKind::T: m << C(1), C(0), C(0), C(r, r); break;
    case GateKind::Tdg: m << C(1), C(0), C(0), C(r, -r); break;
    case GateKind::SWAP: throw ValidationError("swap has no single-target matrix");
  }
  return m;
}

/// Value a control must read for the gate to fire.
inline bool control_value(GateKind kind) { return kind != GateKind::MCX0; }

/// Kronecker product of per-wire 2x2 factors, identity on unnamed wires.
template <typename Scalar>
Operator<Scalar> embed(const std::vector<std::pair<Wire, Matrix2<Scalar>>>& factors,
                       std::size_t wires) {
  Operator<Scalar> out = Operator<Scalar>::Identity(1, 1);
  for (std::size_t w = wires; w-- > 0;) {
    Matrix2<Scalar> f = Matrix2<Scalar>::Identity();
    for (const auto& [wire, m] : factors) {
      if (wire == w) f = m;
    }
    Operator<Scalar> next = Eigen::kroneckerProduct(out, f).eval();
    out = std::move(next);
  }
  return out;
}

/// Full 2^wires x 2^wires matrix of a gate, built from projectors and
/// Kronecker products rather than index arithmetic.
///   controlled G:  I + (prod_c |v_c><v_c|) (G - I)_target
///   SWAP:          (I + XX + YY + ZZ) / 2
template <typename Scalar>
Operator<Scalar> gate_operator(const Gate& gate, std::size_t wires) {
  using C = Complex<Scalar>;
  const std::size_t dim = dimension(wires);
  if (gate.kind == GateKind::SWAP) {
    Operator<Scalar> out = Operator<Scalar>::Identity(dim, dim);
    for (GateKind pauli : {GateKind::X, GateKind::Y, GateKind::Z}) {
      const Matrix2<Scalar> p = target_matrix<Scalar>(pauli);
      out += embed<Scalar>({{gate.targets[0], p}, {gate.targets[1], p}}, wires);
    }
    return out * C(Scalar(0.5));
  }
  std::vector<std::pair<Wire, Matrix2<Scalar>>> factors;
  Matrix2<Scalar> projector = Matrix2<Scalar>::Zero();
  const int v = control_value(gate.kind) ? 1 : 0;
  projector(v, v) = C(1);
  for (Wire c : gate.controls) factors.emplace_back(c, projector);
  factors.emplace_back(gate.targets[0],
                       target_matrix<Scalar>(gate.kind) - Matrix2<Scalar>::Identity());
  return Operator<Scalar>::Identity(dim, dim) + embed<Scalar>(factors, wires);
}

/// Product of every gate operator, last gate leftmost.
template <typename Scalar>
Operator<Scalar> circuit_operator(const Circuit& circuit) {
  const std::size_t dim = dimension(circuit.wires());
  Operator<Scalar> u = Operator<Scalar>::Identity(dim, dim);
  for (const auto& g : circuit.gates()) {
    u = (gate_operator<Scalar>(g, circuit.wires()) * u).eval();
  }
  return u;
}

/// Applies one gate in place by walking basis indices.
template <typename Scalar>
void apply_gate(StateVector<Scalar>& psi, const Gate& gate) {
  using Index = std::uint64_t;
  const auto dim = static_cast<Index>(psi.size());

  if (gate.kind == GateKind::SWAP) {
    const Index a = Index{1} << gate.targets[0];
    const Index b = Index{1} << gate.targets[1];
    for (Index i = 0; i < dim; ++i) {
      if ((i & a) && !(i & b)) std::swap(psi[i], psi[(i ^ a) | b]);
    }
    return;
  }

  Index control_mask = 0;
  for (Wire c : gate.controls) control_mask |= Index{1} << c;
  const Index control_match = control_value(gate.kind) ? control_mask : 0;
  const Index t = Index{1} << gate.targets[0];
  const Matrix2<Scalar> m = target_matrix<Scalar>(gate.kind);

  const bool permutation = m(0, 0) == Complex<Scalar>(0) && m(1, 1) == Complex<Scalar>(0) &&
                           m(0, 1) == Complex<Scalar>(1) && m(1, 0) == Complex<Scalar>(1);
  const bool diagonal = m(0, 1) == Complex<Scalar>(0) && m(1, 0) == Complex<Scalar>(0) &&
                        m(0, 0) == Complex<Scalar>(1);

  for (Index i = 0; i < dim; ++i) {
    if ((i & t) || (i & control_mask) != control_match) continue;
    const Index j = i | t;
    if (permutation) {
      std::swap(psi[i], psi[j]);
    } else if (diagonal) {
      psi[j] *= m(1, 1);
    } else {
      const Complex<Scalar> a0 = psi[i];
      const Complex<Scalar> a1 = psi[j];
      psi[i] = m(0, 0) * a0 + m(0, 1) * a1;
      psi[j] = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }
}

template <typename Scalar>
void apply_circuit(StateVector<Scalar>& psi, const Circuit& circuit) {
  for (const auto& g : circuit.gates()) apply_gate(psi, g);
}

template <typename Scalar>
StateVector<Scalar> basis_state(std::size_t wires, std::uint64_t index) {
  StateVector<Scalar> psi = StateVector<Scalar>::Zero(dimension(wires));
  psi[index] = Complex<Scalar>(1);
  return psi;
}

}  // namespace dqc1
