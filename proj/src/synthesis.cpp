// Copyright 2026 The qsynth Authors
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

#include "qsynth/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsynth/errors.hpp"
#include "qsynth/lamat.hpp"

namespace qsynth {

std::string_view method_name(MethodKind k) {
  switch (k) {
    case MethodKind::CsdImproved: return "csd";
    case MethodKind::Qsd: return "qsd";
    case MethodKind::Bqd: return "bqd";
  }
  return "?";
}

int choose_level(int n) {
  const int l = (2 * n + 2) / 3;
  return std::clamp(l, 2, std::max(n, 2));
}

std::pair<MuxGate, DiagonalSpec> push_diagonal(const DiagonalSpec& d, const MuxGate& m) {
  if (std::find(d.wires.begin(), d.wires.end(), m.target) != d.wires.end()) {
    throw RangeError("diagonal acts on the multiplexor target wire " + std::to_string(m.target));
  }
  return {m, d};
}

namespace {

int qubits_of(const ComplexMatrix& u) {
  const std::size_t d = u.dim();
  if (d < 2 || (d & (d - 1)) != 0) {
    throw DimensionError("matrix dimension " + std::to_string(d) + " is not 2^n with n >= 1");
  }
  int n = 0;
  while ((std::size_t{1} << n) < d) ++n;
  return n;
}

void require_unitary(const ComplexMatrix& u) {
  const double defect = unitarity_defect(u);
  if (!(defect <= boundary_tolerance(u.dim()))) {
    throw ValidationError("input is not unitary: ||U U^dagger - I||_F = " + std::to_string(defect));
  }
}

std::vector<int> wire_range(int first, int last) {
  std::vector<int> w;
  for (int i = first; i <= last; ++i) w.push_back(i);
  return w;
}

// Scales column j of u by d[j].
ComplexMatrix scale_columns(ComplexMatrix u, const std::vector<cplx>& d) {
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < u.dim(); ++c) u(r, c) *= d[c];
  return u;
}

// Folds a one-qubit matrix, applied after everything in `gates`, into the
// last one-qubit gate on `wire`. CNOTs using the wire as control commute with
// a diagonal and are skipped. Returns false if no such gate is reachable.
bool merge_diagonal_back(std::vector<Gate>& gates, int wire, const Mat2& m) {
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    if (it->kind == GateKind::CNOT) {
      if (it->target == wire) return false;
      continue;
    }
    if (it->target != wire) continue;
    *it = Gate::u2(wire, m * it->local_matrix());
    return true;
  }
  return false;
}

void emit_diagonal_rotation(std::vector<Gate>& gates, const Gate& rz_gate) {
  if (!merge_diagonal_back(gates, rz_gate.target, rz_gate.local_matrix())) gates.push_back(rz_gate);
}

// One multiplexor of the fully expanded CSD of a leaf.
struct LeafMux {
  int target;
  std::vector<int> controls;  // all other leaf wires, ascending
  std::vector<Mat2> payload;
};

class Builder {
 public:
  Builder(int n, int level, MethodKind kind) : n_(n), level_(level), kind_(kind), out_(n) {
    if (kind_ == MethodKind::Qsd) {
      level_ = 2;
    } else {
      pending_.assign(std::size_t{1} << level_, cplx(1.0));
      leaves_left_ = std::size_t{1} << (2 * (n_ - level_));
    }
  }

  Circuit run(const ComplexMatrix& u) {
    node(u, 1, n_);
    return std::move(out_);
  }

  // Expands the leaf network of u on wires w0..w0+l-1. The first `skip_last`
  // multiplexors in time order are expanded; the remaining last one is
  // returned unexpanded (with the accumulated diagonal folded in).
  static std::vector<LeafMux> leaf_muxes(const ComplexMatrix& u, int w0, int l) {
    std::vector<LeafMux> list;
    csd_expand({u}, 0, w0, l, list);
    std::reverse(list.begin(), list.end());
    return list;
  }

  // Expands muxes in time order, threading the residual through. `delta` is
  // over the leaf wires with w0 most significant.
  static void expand_chain(std::vector<LeafMux>::const_iterator begin,
                           std::vector<LeafMux>::const_iterator end, int w0, int l,
                           std::vector<cplx>& delta, std::vector<Gate>& gates) {
    for (auto it = begin; it != end; ++it) {
      detail::MuxParts parts = expand_with_delta(*it, w0, l, delta);
      gates.insert(gates.end(), parts.gates.begin(), parts.gates.end());
      store_residual(*it, w0, l, parts.diag, delta);
    }
  }

  static detail::MuxParts expand_with_delta(const LeafMux& m, int w0, int l,
                                            const std::vector<cplx>& delta) {
    std::vector<Mat2> payload = m.payload;
    for (std::size_t c = 0; c < payload.size(); ++c) {
      payload[c] = payload[c] * Mat2::diag(delta[leaf_index(m, w0, l, c, 0)],
                                           delta[leaf_index(m, w0, l, c, 1)]);
    }
    return detail::expand_u2_parts(payload, m.controls, m.target);
  }

 private:
  static std::size_t leaf_index(const LeafMux& m, int w0, int l, std::size_t c, std::size_t tb) {
    const unsigned pos = unsigned(w0 + l - 1 - m.target);
    const std::size_t low = c & ((std::size_t{1} << pos) - 1);
    return ((c >> pos) << (pos + 1)) | (tb << pos) | low;
  }

  static void store_residual(const LeafMux& m, int w0, int l, const std::vector<cplx>& diag,
                             std::vector<cplx>& delta) {
    for (std::size_t c = 0; c < m.payload.size(); ++c) {
      delta[leaf_index(m, w0, l, c, 0)] = diag[2 * c];
      delta[leaf_index(m, w0, l, c, 1)] = diag[2 * c + 1];
    }
  }

  // Recursive CSD of a multiplexed set of blocks selected by the first s leaf
  // wires; appends multiplexors in matrix order.
  static void csd_expand(const std::vector<ComplexMatrix>& blocks, int s, int w0, int l,
                         std::vector<LeafMux>& list) {
    const int m = l - s;
    if (m == 1) {
      LeafMux g{w0 + l - 1, wire_range(w0, w0 + l - 2), {}};
      for (const ComplexMatrix& b : blocks) g.payload.push_back(b.to_mat2());
      list.push_back(std::move(g));
      return;
    }
    const std::size_t half = std::size_t{1} << (m - 1);
    std::vector<ComplexMatrix> left, right;
    LeafMux y{w0 + s, wire_range(w0, w0 + s - 1), {}};
    for (int w = w0 + s + 1; w <= w0 + l - 1; ++w) y.controls.push_back(w);
    for (const ComplexMatrix& b : blocks) {
      CsdResult cs = cosine_sine_decompose(b);
      left.push_back(std::move(cs.l1));
      left.push_back(std::move(cs.l2));
      right.push_back(std::move(cs.r1));
      right.push_back(std::move(cs.r2));
      for (std::size_t j = 0; j < half; ++j) y.payload.push_back(ry(2 * cs.angles[j]));
    }
    csd_expand(left, s + 1, w0, l, list);
    list.push_back(std::move(y));
    csd_expand(right, s + 1, w0, l, list);
  }

  void node(const ComplexMatrix& u, int w0, int i) {
    if (i == level_) {
      leaf(u, w0);
      return;
    }
    const std::size_t half = u.dim() / 2;
    CsdResult cs = cosine_sine_decompose(u);
    const std::vector<int> controls = wire_range(w0 + 1, w0 + i - 1);

    std::vector<double> y_angles(half);
    for (std::size_t j = 0; j < half; ++j) y_angles[j] = 2 * cs.angles[j];
    detail::MuxParts ymux = detail::expand_ry_up_to_diagonal(y_angles, controls, w0);
    std::vector<cplx> res0(half), res1(half);
    for (std::size_t j = 0; j < half; ++j) {
      res0[j] = ymux.diag[2 * j];
      res1[j] = ymux.diag[2 * j + 1];
    }
    const ComplexMatrix l1 = scale_columns(cs.l1, res0);
    const ComplexMatrix l2 = scale_columns(cs.l2, res1);

    DemuxResult dr = demux_block_diagonal(cs.r1, cs.r2);
    DemuxResult dl = demux_block_diagonal(l1, l2);
    std::vector<Gate> rz_r = rz_mux(w0, controls, dr.d_phases);
    std::vector<Gate> rz_l = rz_mux(w0, controls, dl.d_phases);
    std::reverse(rz_r.begin(), rz_r.end());  // diagonal, so reversal is exact

    // rz_r ends and rz_l starts with a rotation on w0; both fuse with the Y
    // cascade across the lower-wire blocks in between.
    Gate& y_first = ymux.gates.front();
    y_first = Gate::u2(w0, y_first.local_matrix() * rz_r.back().local_matrix());
    rz_r.pop_back();
    Gate& y_last = ymux.gates.back();
    y_last = Gate::u2(w0, rz_l.front().local_matrix() * y_last.local_matrix());
    rz_l.erase(rz_l.begin());

    node(dr.w, w0 + 1, i - 1);
    emit(rz_r);
    node(dr.v, w0 + 1, i - 1);
    emit(ymux.gates);
    node(dl.w, w0 + 1, i - 1);
    emit(rz_l);
    node(dl.v, w0 + 1, i - 1);
  }

  static std::vector<Gate> rz_mux(int target, const std::vector<int>& controls,
                                  const std::vector<cplx>& d) {
    std::vector<double> angles(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) angles[j] = -2 * std::arg(d[j]);
    return gray_rotation_gates(MuxAxis::Z, target, controls, angles);
  }

  void emit(const std::vector<Gate>& gates) {
    for (const Gate& g : gates) out_.add(g);
  }

  void leaf(const ComplexMatrix& u, int w0) {
    if (kind_ == MethodKind::Qsd) {
      out_.append(detail::two_qubit_on_wires(u, w0, n_));
      return;
    }
    const ComplexMatrix merged = scale_columns(u, pending_);
    const std::vector<LeafMux> muxes = leaf_muxes(merged, w0, level_);
    std::fill(pending_.begin(), pending_.end(), cplx(1.0));
    --leaves_left_;
    std::vector<Gate>& gates = out_.mutable_gates();
    if (leaves_left_ > 0) {
      expand_chain(muxes.begin(), muxes.end(), w0, level_, pending_, gates);
      return;
    }
    expand_chain(muxes.begin(), muxes.end() - 1, w0, level_, pending_, gates);
    final_stage(muxes.back(), w0, gates);
  }

  // Last multiplexor of the last leaf plus the terminal diagonal. The
  // multiplexor expansion ends in U2_x, CX(c, t), U2_y; together with the two
  // lowest levels of the diagonal's Rz cascade this is a one-control
  // multiplexor on t, rebuilt with two CNOTs. The remaining cascade levels
  // have their leading rotation folded into earlier gates.
  void final_stage(const LeafMux& last, int w0, std::vector<Gate>& gates) {
    const int l = level_;
    const int t = w0 + l - 1;
    const int c = t - 1;
    detail::MuxParts parts = expand_with_delta(last, w0, l, pending_);
    const DiagonalSpec delta{wire_range(w0, t), parts.diag};
    auto [levels, phase] = diagonal_to_rz_cascade(delta);

    const std::size_t m = parts.gates.size();
    const Mat2 ux = parts.gates[m - 3].local_matrix();
    const Mat2 uy = parts.gates[m - 1].local_matrix();
    parts.gates.resize(m - 3);

    const MuxGate& lc = levels[std::size_t(l - 2)];  // target c, control t
    const MuxGate& lt = levels[std::size_t(l - 1)];  // target t
    const Mat2 x(0.0, 1.0, 1.0, 0.0);
    Mat2 p[2];
    for (int b = 0; b < 2; ++b) {
      const double zc = b == 0 ? -0.5 : 0.5;
      const cplx t0 = std::polar(1.0, zc * lc.angles[0] - 0.5 * lt.angles[0]);
      const cplx t1 = std::polar(1.0, zc * lc.angles[1] + 0.5 * lt.angles[0]);
      p[b] = Mat2::diag(t0, t1) * uy * (b == 0 ? Mat2::identity() : x) * ux;
    }
    const DemuxResult dm = demux_block_diagonal(ComplexMatrix::from_mat2(p[0]),
                                                ComplexMatrix::from_mat2(p[1]));
    const double alpha = std::arg(dm.d_phases[0]);
    const double beta = std::arg(dm.d_phases[1]);
    const double a = 0.5 * (alpha + beta);
    const double e = 0.5 * (alpha - beta);

    gates.insert(gates.end(), parts.gates.begin(), parts.gates.end());
    gates.push_back(Gate::u2(t, dm.w.to_mat2()));
    gates.push_back(Gate::cnot(c, t));
    gates.push_back(Gate::rz(t, -2 * e));
    gates.push_back(Gate::cnot(c, t));
    gates.push_back(Gate::u2(t, dm.v.to_mat2()));
    emit_diagonal_rotation(gates, Gate::rz(c, -2 * a));

    for (int j = l - 3; j >= 0; --j) {
      const MuxGate& lv = levels[std::size_t(j)];
      std::vector<Gate> g = gray_rotation_gates(MuxAxis::Z, lv.target, lv.controls, lv.angles);
      emit_diagonal_rotation(gates, g.front());
      gates.insert(gates.end(), g.begin() + 1, g.end());
    }
    out_.add_global_phase(phase);
    for (const Gate& g : gates) validate_gate(g, n_);
  }

  int n_;
  int level_;
  MethodKind kind_;
  Circuit out_;
  std::vector<cplx> pending_;
  std::size_t leaves_left_ = 0;
};

Circuit single_qubit(const ComplexMatrix& u) {
  Circuit c(1);
  c.add(Gate::u2(1, u.to_mat2()));
  return c;
}

}  // namespace

BasicBlockResult basic_block_q(const ComplexMatrix& u) {
  const int l = qubits_of(u);
  if (l < 2) throw RangeError("basic block needs at least two qubits");
  require_unitary(u);
  const std::vector<LeafMux> muxes = Builder::leaf_muxes(u, 1, l);
  std::vector<cplx> delta(u.dim(), cplx(1.0));
  std::vector<Gate> gates;
  Builder::expand_chain(muxes.begin(), muxes.end(), 1, l, delta, gates);
  BasicBlockResult out{Circuit(l), DiagonalSpec{wire_range(1, l), std::move(delta)}};
  for (const Gate& g : gates) out.q_circuit.add(g);
  return out;
}

Circuit synth_bqd(const ComplexMatrix& u, int level) {
  const int n = qubits_of(u);
  require_unitary(u);
  if (n == 1) return single_qubit(u);
  if (level < 2 || level > n) {
    throw RangeError("level " + std::to_string(level) + " outside 2.." + std::to_string(n));
  }
  return Builder(n, level, MethodKind::Bqd).run(u);
}

Circuit synth_csd_improved(const ComplexMatrix& u) {
  const int n = qubits_of(u);
  require_unitary(u);
  if (n == 1) return single_qubit(u);
  return Builder(n, n, MethodKind::CsdImproved).run(u);
}

Circuit synth_qsd(const ComplexMatrix& u) {
  const int n = qubits_of(u);
  require_unitary(u);
  if (n == 1) return single_qubit(u);
  return Builder(n, 2, MethodKind::Qsd).run(u);
}

Circuit synthesize(const ComplexMatrix& u, SynthMethod method) {
  switch (method.kind) {
    case MethodKind::CsdImproved: return synth_csd_improved(u);
    case MethodKind::Qsd: return synth_qsd(u);
    case MethodKind::Bqd: {
      const int n = qubits_of(u);
      return synth_bqd(u, method.level == 0 ? choose_level(n) : method.level);
    }
  }
  throw UnsupportedError("unknown synthesis method");
}

}  // namespace qsynth
