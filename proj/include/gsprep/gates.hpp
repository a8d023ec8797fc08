#pragma once

#include <string>
#include <vector>

namespace gsprep {

/// Single- and two-qubit Clifford gate kinds. SqrtXp means exp(+i pi/4 X),
/// SqrtXm means exp(-i pi/4 X), and likewise for Y and Z; these cover every
/// factor of the local-complement unitary and the measurement byproducts
/// (sqrt(+iP) = exp(+i pi/4 P)). Conjugation-wise S acts as exp(-i pi/4 Z)
/// and Sdg as exp(+i pi/4 Z).
enum class Gate {
  H,
  S,
  Sdg,
  SqrtXp,
  SqrtXm,
  SqrtYp,
  SqrtYm,
  SqrtZp,
  SqrtZm,
  X,
  Y,
  Z,
  CZ,
};

struct GateOp {
  Gate gate;
  int q1 = -1;
  int q2 = -1;  // only for CZ

  bool operator==(const GateOp&) const = default;
};

std::string gate_name(Gate g);

}  // namespace gsprep
