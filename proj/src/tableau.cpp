#include "gsprep/tableau.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "gsprep/errors.hpp"

namespace gsprep {

void PauliRow::set_x(int q, bool b) {
  uint64_t m = uint64_t{1} << (q & 63);
  if (b)
    x[q >> 6] |= m;
  else
    x[q >> 6] &= ~m;
}

void PauliRow::set_z(int q, bool b) {
  uint64_t m = uint64_t{1} << (q & 63);
  if (b)
    z[q >> 6] |= m;
  else
    z[q >> 6] &= ~m;
}

bool PauliRow::identity() const {
  for (uint64_t w : x)
    if (w) return false;
  for (uint64_t w : z)
    if (w) return false;
  return true;
}

static PauliRow empty_row(int words) {
  PauliRow r;
  r.x.assign(words, 0);
  r.z.assign(words, 0);
  return r;
}

static bool anticommute(const PauliRow& a, const PauliRow& b) {
  uint64_t acc = 0;
  for (size_t w = 0; w < a.x.size(); ++w) {
    acc ^= (a.x[w] & b.z[w]) ^ (a.z[w] & b.x[w]);
  }
  return std::popcount(acc) & 1;
}

// Aaronson-Gottesman g function: the power of i picked up when multiplying
// the single-qubit Paulis (x1,z1)*(x2,z2), summed over all qubits.
static int phase_exponent(const PauliRow& a, const PauliRow& b) {
  long long total = 0;
  for (size_t w = 0; w < a.x.size(); ++w) {
    uint64_t x1 = a.x[w], z1 = a.z[w], x2 = b.x[w], z2 = b.z[w];
    uint64_t y1 = x1 & z1;
    uint64_t xonly = x1 & ~z1;
    uint64_t zonly = ~x1 & z1;
    total += std::popcount(y1 & z2) - std::popcount(y1 & x2);           // Y: z2 - x2
    total += 2 * std::popcount(xonly & z2 & x2) - std::popcount(xonly & z2);  // X: z2(2x2-1)
    total += std::popcount(zonly & x2) - 2 * std::popcount(zonly & x2 & z2);  // Z: x2(1-2z2)
  }
  return static_cast<int>(((total % 4) + 4) % 4);
}

// dst <- dst * src with sign tracking; the product of commuting +-1 Paulis
// always has a real phase.
static void mul_into(PauliRow& dst, const PauliRow& src) {
  int e = phase_exponent(dst, src) + 2 * (dst.sign ? 1 : 0) + 2 * (src.sign ? 1 : 0);
  e = ((e % 4) + 4) % 4;
  if (e & 1) throw std::logic_error("tableau: row product has imaginary phase");
  dst.sign = (e == 2);
  for (size_t w = 0; w < dst.x.size(); ++w) {
    dst.x[w] ^= src.x[w];
    dst.z[w] ^= src.z[w];
  }
}

void Tableau::mul_row(int target, const PauliRow& src) { mul_into(rows_[target], src); }

namespace {
// Sign-tracking RREF over the 2q symplectic columns (X block then Z block).
struct Rref {
  std::vector<PauliRow> rows;
  std::vector<int> pivots;
  int q;

  explicit Rref(const Tableau& t) : rows(t.rows()), q(t.num_qubits()) {
    int rank = 0;
    for (int col = 0; col < 2 * q && rank < static_cast<int>(rows.size()); ++col) {
      int qq = col % q;
      bool use_x = col < q;
      int piv = -1;
      for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
        if (use_x ? rows[i].get_x(qq) : rows[i].get_z(qq)) {
          piv = i;
          break;
        }
      }
      if (piv < 0) continue;
      std::swap(rows[rank], rows[piv]);
      for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        if (i != rank && (use_x ? rows[i].get_x(qq) : rows[i].get_z(qq))) {
          mul_into(rows[i], rows[rank]);
        }
      }
      pivots.push_back(col);
      ++rank;
    }
  }

  // Reduce r over the basis; true iff r lies in the group up to sign.
  bool reduce(PauliRow& r) const {
    for (size_t i = 0; i < pivots.size(); ++i) {
      int col = pivots[i];
      int qq = col % q;
      bool use_x = col < q;
      if (use_x ? r.get_x(qq) : r.get_z(qq)) mul_into(r, rows[i]);
    }
    return r.identity();
  }
};
}  // namespace

Tableau::Tableau(int num_qubits) : q_(num_qubits), words_((num_qubits + 63) / 64 + 1) {
  rows_.assign(q_, empty_row(words_));
  for (int i = 0; i < q_; ++i) rows_[i].set_x(i, true);
}

Tableau graph_state_tableau(const Graph& g) {
  Tableau t(g.num_vertices());
  for (auto [u, v] : g.edge_list()) t.apply(Gate::CZ, u, v);
  return t;
}

namespace {
// Per-gate conjugation on {X=0, Y=1, Z=2}: image index plus sign flip.
struct Conj {
  uint8_t img[3];
  bool neg[3];
};

Conj conj_table(Gate g) {
  switch (g) {
    case Gate::H: return {{2, 1, 0}, {false, true, false}};
    case Gate::S: return {{1, 0, 2}, {false, true, false}};
    case Gate::Sdg: return {{1, 0, 2}, {true, false, false}};
    case Gate::SqrtXp: return {{0, 2, 1}, {false, true, false}};
    case Gate::SqrtXm: return {{0, 2, 1}, {false, false, true}};
    case Gate::SqrtYp: return {{2, 1, 0}, {true, false, false}};
    case Gate::SqrtYm: return {{2, 1, 0}, {false, false, true}};
    case Gate::SqrtZp: return {{1, 0, 2}, {true, false, false}};
    case Gate::SqrtZm: return {{1, 0, 2}, {false, true, false}};
    case Gate::X: return {{0, 1, 2}, {false, true, true}};
    case Gate::Y: return {{0, 1, 2}, {true, false, true}};
    case Gate::Z: return {{0, 1, 2}, {true, true, false}};
    case Gate::CZ: break;
  }
  throw std::logic_error("conj_table: not a single-qubit gate");
}
}  // namespace

void Tableau::apply(Gate g, int q1, int q2) {
  if (g == Gate::CZ) {
    if (q1 < 0 || q1 >= q_ || q2 < 0 || q2 >= q_ || q1 == q2) {
      throw InputError("tableau: bad CZ qubits");
    }
    for (auto& r : rows_) {
      bool x1 = r.get_x(q1), x2 = r.get_x(q2);
      r.set_z(q1, r.get_z(q1) ^ x2);
      r.set_z(q2, r.get_z(q2) ^ x1);
      if (x1 && x2 && (r.get_z(q1) ^ r.get_z(q2))) r.sign = !r.sign;
    }
    return;
  }
  if (q1 < 0 || q1 >= q_) throw InputError("tableau: qubit out of range");
  Conj c = conj_table(g);
  for (auto& r : rows_) {
    bool x = r.get_x(q1), z = r.get_z(q1);
    if (!x && !z) continue;
    int p = x ? (z ? 1 : 0) : 2;
    int img = c.img[p];
    r.set_x(q1, img != 2);
    r.set_z(q1, img != 0);
    if (c.neg[p]) r.sign = !r.sign;
  }
}

void Tableau::apply(const GateOp& op) { apply(op.gate, op.q1, op.q2); }

int Tableau::measure(const PauliRow& pauli, std::optional<int> forced) {
  if (forced && *forced != 1 && *forced != -1) throw InputError("measure: forced sign must be +-1");
  int pivot = -1;
  for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
    if (anticommute(rows_[i], pauli)) {
      pivot = i;
      break;
    }
  }
  if (pivot >= 0) {
    // Random outcome; condition on the requested branch.
    int outcome = forced.value_or(+1);
    for (int i = pivot + 1; i < static_cast<int>(rows_.size()); ++i) {
      if (anticommute(rows_[i], pauli)) mul_row(i, rows_[pivot]);
    }
    rows_[pivot] = pauli;
    if (outcome < 0) rows_[pivot].sign = !rows_[pivot].sign;
    return outcome;
  }
  // Determined: the commuting Pauli lies in +-group; recover its sign.
  Rref basis(*this);
  PauliRow r = pauli;
  if (!basis.reduce(r)) {
    throw std::logic_error("measure: commuting Pauli outside the stabilizer group");
  }
  int outcome = r.sign ? -1 : +1;
  if (forced && *forced != outcome) {
    throw InputError("measure: forced sign contradicts a determined outcome");
  }
  return outcome;
}

int Tableau::measure_qubit(int qubit, char basis, std::optional<int> forced) {
  if (qubit < 0 || qubit >= q_) throw InputError("measure_qubit: qubit out of range");
  PauliRow p = empty_row(words_);
  switch (basis) {
    case 'X':
    case 'x': p.set_x(qubit, true); break;
    case 'Y':
    case 'y':
      p.set_x(qubit, true);
      p.set_z(qubit, true);
      break;
    case 'Z':
    case 'z': p.set_z(qubit, true); break;
    default: throw InputError("measure_qubit: basis must be X, Y or Z");
  }
  int outcome = measure(p, forced);
  // Disentangle the measured qubit and trace it out. After a random-outcome
  // measurement one generator is +-P on this qubit alone; multiply it into
  // every other row still touching the qubit, then drop both.
  int pivot = -1;
  for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
    if (rows_[i].x == p.x && rows_[i].z == p.z) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) {
    // Determined outcome: rotate the generating set so that +-P itself
    // becomes a generator (swap it for one row of the product equal to P).
    Rref basis(*this);
    rows_ = basis.rows;
    PauliRow r = p;
    int last_used = -1;
    for (size_t i = 0; i < basis.pivots.size(); ++i) {
      int col = basis.pivots[i];
      int qq = col % q_;
      bool use_x = col < q_;
      if (use_x ? r.get_x(qq) : r.get_z(qq)) {
        mul_into(r, rows_[i]);
        last_used = static_cast<int>(i);
      }
    }
    if (!r.identity() || last_used < 0) {
      throw std::logic_error("measure_qubit: determined Pauli not in group");
    }
    pivot = last_used;
    rows_[pivot] = p;
    rows_[pivot].sign = outcome < 0;
  }
  for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
    if (i != pivot && (rows_[i].get_x(qubit) || rows_[i].get_z(qubit))) {
      mul_row(i, rows_[pivot]);
    }
  }
  rows_.erase(rows_.begin() + pivot);
  drop_qubit(qubit);
  return outcome;
}

void Tableau::drop_qubit(int qubit) {
  for (const auto& r : rows_) {
    if (r.get_x(qubit) || r.get_z(qubit)) {
      throw std::logic_error("drop_qubit: qubit still entangled");
    }
  }
  int nq = q_ - 1;
  int nwords = (std::max(nq, 1) + 63) / 64 + 1;
  std::vector<PauliRow> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) {
    PauliRow nr = empty_row(nwords);
    nr.sign = r.sign;
    for (int q = 0, t = 0; q < q_; ++q) {
      if (q == qubit) continue;
      nr.set_x(t, r.get_x(q));
      nr.set_z(t, r.get_z(q));
      ++t;
    }
    out.push_back(std::move(nr));
  }
  rows_ = std::move(out);
  q_ = nq;
  words_ = nwords;
}

std::vector<int> Tableau::graph_neighborhood(int qubit) const {
  // X-part-only Gaussian elimination; the combination with X-part e_qubit
  // is the graph generator of this qubit when the state is graph-form.
  std::vector<PauliRow> work = rows_;
  int rank = 0;
  std::vector<int> pivcol;
  for (int col = 0; col < q_ && rank < static_cast<int>(work.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(work.size()); ++i) {
      if (work[i].get_x(col)) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(work[rank], work[piv]);
    for (int i = 0; i < static_cast<int>(work.size()); ++i) {
      if (i != rank && work[i].get_x(col)) mul_into(work[i], work[rank]);
    }
    pivcol.push_back(col);
    ++rank;
  }
  for (int i = 0; i < rank; ++i) {
    if (pivcol[i] != qubit) continue;
    for (int c = 0; c < q_; ++c) {
      if (c != qubit && work[i].get_x(c)) {
        throw InputError("graph_neighborhood: not graph-form at qubit " + std::to_string(qubit));
      }
    }
    std::vector<int> nbrs;
    for (int c = 0; c < q_; ++c) {
      if (c != qubit && work[i].get_z(c)) nbrs.push_back(c);
    }
    return nbrs;
  }
  throw InputError("graph_neighborhood: no X-pivot at qubit " + std::to_string(qubit));
}

void Tableau::fuse_pair(int q1, int q2, int s1, int s2, std::optional<std::vector<int>> n1,
                        std::optional<std::vector<int>> n2) {
  if (q1 == q2) throw InputError("fuse_pair: qubits coincide");
  if ((s1 < 0 || s2 < 0) && (!n1 || !n2)) {
    n1 = graph_neighborhood(q1);
    n2 = graph_neighborhood(q2);
  }
  apply(Gate::H, q2);
  PauliRow mxx = empty_row(words_), mzz = empty_row(words_);
  mxx.set_x(q1, true);
  mxx.set_x(q2, true);
  mzz.set_z(q1, true);
  mzz.set_z(q2, true);
  measure(mxx, s1);
  measure(mzz, s2);
  if (s2 < 0) {
    for (int a : *n1) apply(Gate::Z, a);
  }
  if (s1 < 0) {
    for (int b : *n2) apply(Gate::Z, b);
  }
  // The Bell rows +XX, +ZZ are now generators; every other row's restriction
  // to (q1,q2) commutes with both, i.e. is II, XX, ZZ or YY, and clears by
  // multiplying the Bell rows in.
  auto find_row = [&](const PauliRow& m) {
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
      if (rows_[i].x == m.x && rows_[i].z == m.z) return i;
    }
    throw std::logic_error("fuse_pair: Bell generator missing");
  };
  int rx = find_row(mxx);
  int rz = find_row(mzz);
  for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
    if (i == rx || i == rz) continue;
    if (rows_[i].get_x(q1) || rows_[i].get_x(q2)) mul_row(i, rows_[rx]);
    if (rows_[i].get_z(q1) || rows_[i].get_z(q2)) mul_row(i, rows_[rz]);
  }
  rows_.erase(rows_.begin() + std::max(rx, rz));
  rows_.erase(rows_.begin() + std::min(rx, rz));
  drop_qubit(std::max(q1, q2));
  drop_qubit(std::min(q1, q2));
}

Tableau Tableau::tensor(const Tableau& a, const Tableau& b) {
  Tableau t(a.q_ + b.q_);
  int words = t.words_;
  t.rows_.assign(static_cast<size_t>(a.q_) + b.q_, empty_row(words));
  for (int i = 0; i < a.q_; ++i) {
    t.rows_[i].sign = a.rows_[i].sign;
    for (int q = 0; q < a.q_; ++q) {
      t.rows_[i].set_x(q, a.rows_[i].get_x(q));
      t.rows_[i].set_z(q, a.rows_[i].get_z(q));
    }
  }
  for (int i = 0; i < b.q_; ++i) {
    auto& row = t.rows_[a.q_ + i];
    row.sign = b.rows_[i].sign;
    for (int q = 0; q < b.q_; ++q) {
      row.set_x(a.q_ + q, b.rows_[i].get_x(q));
      row.set_z(a.q_ + q, b.rows_[i].get_z(q));
    }
  }
  return t;
}

Tableau fuse_type2_tableau(const Tableau& t1, int q1, const Tableau& t2, int q2, int s1, int s2) {
  std::optional<std::vector<int>> n1, n2;
  if (s1 < 0 || s2 < 0) {
    n1 = t1.graph_neighborhood(q1);
    n2 = t2.graph_neighborhood(q2);
    for (int& b : *n2) b += t1.num_qubits();
  }
  Tableau t = Tableau::tensor(t1, t2);
  t.fuse_pair(q1, q2 + t1.num_qubits(), s1, s2, n1, n2);
  return t;
}

bool states_equal(const Tableau& t1, const Tableau& t2) {
  if (t1.num_qubits() != t2.num_qubits()) {
    throw InputError("states_equal: qubit counts differ");
  }
  Rref basis(t1);
  for (const auto& gen : t2.rows()) {
    PauliRow r = gen;
    if (!basis.reduce(r) || r.sign) return false;
  }
  return true;
}

bool Tableau::valid() const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    for (size_t j = i + 1; j < rows_.size(); ++j) {
      if (anticommute(rows_[i], rows_[j])) return false;
    }
  }
  Rref basis(*this);
  return basis.pivots.size() == rows_.size();
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  for (const auto& r : rows_) {
    os << (r.sign ? '-' : '+');
    for (int q = 0; q < q_; ++q) {
      bool x = r.get_x(q), z = r.get_z(q);
      os << (x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I'));
    }
    os << '\n';
  }
  return os.str();
}

std::vector<GateOp> lc_unitary_gates(int v, std::span<const int> neighborhood) {
  std::vector<GateOp> gates;
  gates.push_back({Gate::SqrtXm, v});
  for (int u : neighborhood) gates.push_back({Gate::SqrtZp, u});
  return gates;
}

}  // namespace gsprep
