#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsprep/gates.hpp"
#include "gsprep/graph.hpp"

namespace gsprep {

/// One stabilizer generator: (-1)^sign * tensor of {I,X,Y,Z}, encoded as
/// X/Z bit vectors (x=z=1 means Y).
struct PauliRow {
  std::vector<uint64_t> x;
  std::vector<uint64_t> z;
  bool sign = false;

  bool get_x(int q) const { return (x[q >> 6] >> (q & 63)) & 1; }
  bool get_z(int q) const { return (z[q >> 6] >> (q & 63)) & 1; }
  void set_x(int q, bool b);
  void set_z(int q, bool b);
  bool identity() const;
};

/// Binary-symplectic stabilizer tableau: q generator rows over q qubits.
/// Rows stay independent and pairwise commuting under every operation.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(int num_qubits);  // |+>^n

  int num_qubits() const { return q_; }
  const std::vector<PauliRow>& rows() const { return rows_; }

  void apply(const GateOp& op);
  void apply(Gate g, int q1, int q2 = -1);

  /// Measure the Pauli given by (x,z) support sets. Returns the outcome
  /// sign. If the outcome is random, `forced` picks the branch; if it is
  /// determined, a contradicting `forced` throws.
  int measure(const PauliRow& pauli, std::optional<int> forced);

  /// Convenience single-qubit basis measurement.
  int measure_qubit(int qubit, char basis, std::optional<int> forced);

  /// Removes a qubit on which every row acts as identity.
  void drop_qubit(int qubit);

  /// Neighborhood of q assuming the state is a graph state: the Z-support
  /// of the unique group element whose X-part is exactly {q}.
  std::vector<int> graph_neighborhood(int qubit) const;

  /// Type-II fusion inside one register: H on q2, measure X X and Z Z with
  /// the given forced outcomes, apply the outcome corrections (Z on the
  /// fused qubits' graph neighborhoods), and remove both qubits. The
  /// neighborhoods may be supplied by the caller; with both outcomes forced
  /// + they are not needed.
  void fuse_pair(int q1, int q2, int s1, int s2,
                 std::optional<std::vector<int>> n1 = std::nullopt,
                 std::optional<std::vector<int>> n2 = std::nullopt);

  bool valid() const;  // rows independent and pairwise commuting

  std::string to_string() const;

  static Tableau tensor(const Tableau& a, const Tableau& b);

 private:
  friend bool states_equal(const Tableau& t1, const Tableau& t2);
  void mul_row(int target, const PauliRow& src);
  int q_ = 0;
  int words_ = 0;
  std::vector<PauliRow> rows_;
};

/// Stabilizer of |G>: row v = X_v prod_{u in N(v)} Z_u with + sign.
Tableau graph_state_tableau(const Graph& g);

/// True iff the two stabilizer groups, signs included, coincide.
bool states_equal(const Tableau& t1, const Tableau& t2);

/// Type-II fusion of two registers (tensor, then fuse_pair). Corrections
/// for non-+ outcomes are derived from the graph-form neighborhoods of the
/// two input states.
Tableau fuse_type2_tableau(const Tableau& t1, int q1, const Tableau& t2, int q2, int s1 = +1,
                           int s2 = +1);

/// Gate realization of the local-complement unitary at v: sqrtX(-) on v and
/// sqrtZ(+) on every u in the recorded neighborhood.
std::vector<GateOp> lc_unitary_gates(int v, std::span<const int> neighborhood);

}  // namespace gsprep
