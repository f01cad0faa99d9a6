#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <vector>

#include "bosepoly/configurations.hpp"
#include "bosepoly/halfspace.hpp"
#include "bosepoly/polytope.hpp"

namespace bosepoly {

/// Canonical configuration basis of the symmetric N-particle sector with d
/// modes, in lexicographic order on the index tuples.
class FockBasis {
 public:
  FockBasis(int N, int d) : N_(N), d_(d), states_(enumerate_configurations(N, d)) {
    if (size() > 500) throw SizeError("sector dimension capped at 500");
    for (int i = 0; i < size(); ++i)
      index_[states_[i].indices()] = i;
  }

  int particle_count() const { return N_; }
  int mode_count() const { return d_; }
  int size() const { return static_cast<int>(states_.size()); }
  const Configuration& state(int i) const { return states_[i]; }
  const std::vector<Configuration>& states() const { return states_; }

  int index_of_occupation(const std::vector<int>& occ) const {
    std::vector<int> idx;
    for (int k = 0; k < d_; ++k)
      idx.insert(idx.end(), occ[k], k + 1);
    const auto it = index_.find(idx);
    return it == index_.end() ? -1 : it->second;
  }

 private:
  int N_, d_;
  std::vector<Configuration> states_;
  std::map<std::vector<int>, int> index_;
};

enum class OperatorKind { OneBody, Interaction, Total };

struct ManyBodyOperator {
  FockBasis basis;
  Eigen::MatrixXd matrix;
  OperatorKind kind;

  ManyBodyOperator(FockBasis b, Eigen::MatrixXd m, OperatorKind k)
      : basis(std::move(b)), matrix(std::move(m)), kind(k) {
    if (matrix.rows() != basis.size() || matrix.cols() != basis.size())
      throw DimensionError("operator matrix must match the sector dimension");
    if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > 1e-12)
      throw PreconditionError("operator must be Hermitian to 1e-12");
  }
};

struct ManyBodyState {
  FockBasis basis;
  Eigen::MatrixXd gamma_n;  // density matrix on the sector
};

/// Diagonal one-particle Hamiltonian sum_k h_{i_k} in the configuration basis.
inline ManyBodyOperator build_noninteracting(const std::vector<double>& h, int N) {
  const int d = static_cast<int>(h.size());
  FockBasis basis(N, d);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(basis.size(), basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    double e = 0;
    for (int idx : basis.state(i).indices()) e += h[idx - 1];
    m(i, i) = e;
  }
  return ManyBodyOperator(std::move(basis), std::move(m), OperatorKind::OneBody);
}

/// Open-chain Bose-Hubbard Hamiltonian
///   H = -J sum_i (b+_i b_{i+1} + h.c.) + U/2 sum_i n_i (n_i - 1) + sum_i v_i n_i.
inline ManyBodyOperator build_bose_hubbard(double J, double U,
                                           const std::vector<double>& v, int N,
                                           int d) {
  if (d > 6 || N > 6) throw SizeError("dense Bose-Hubbard envelope is d <= 6, N <= 6");
  if (static_cast<int>(v.size()) != d)
    throw DimensionError("site potential needs one entry per site");
  FockBasis basis(N, d);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(basis.size(), basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    const auto occ = basis.state(i).occupation_vector();
    double diag = 0;
    for (int s = 0; s < d; ++s)
      diag += 0.5 * U * occ[s] * (occ[s] - 1) + v[s] * occ[s];
    m(i, i) = diag;
    for (int s = 0; s + 1 < d; ++s) {
      if (occ[s] == 0) continue;  // b+_{s+1} b_s
      std::vector<int> to = occ;
      --to[s];
      ++to[s + 1];
      const int j = basis.index_of_occupation(to);
      const double amp = -J * std::sqrt(double(occ[s]) * double(to[s + 1]));
      m(j, i) += amp;
      m(i, j) += amp;
    }
  }
  return ManyBodyOperator(std::move(basis), std::move(m), OperatorKind::Total);
}

struct GokResult {
  ManyBodyState state;
  double energy = 0;
  std::vector<double> eigenvalues;
  bool degenerate = false;  // weighted levels closer than 1e-10
};

/// The ensemble minimizer with prescribed spectrum w: the weighted sum of
/// projectors onto the r lowest eigenstates, with the weighted energy.
/// Eigenvectors are sign-fixed (largest-magnitude component positive) so a
/// given build is deterministic; degeneracy across distinct weights is
/// flagged rather than resolved.
inline GokResult gok_minimizer(const ManyBodyOperator& op, const WeightVector& w) {
  const int dim = op.basis.size();
  const int r = w.r();
  if (r > dim) throw SizeError("more nonzero weights than sector dimensions");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.matrix);
  GokResult out{ManyBodyState{op.basis, Eigen::MatrixXd::Zero(dim, dim)}, 0.0, {}, false};
  const auto& evals = solver.eigenvalues();
  out.eigenvalues.assign(evals.data(), evals.data() + dim);
  for (int j = 0; j + 1 < dim && j < r; ++j) {
    const double wj = w[j].get_d();
    const double wj1 = j + 1 < w.size() ? w[j + 1].get_d() : 0.0;
    if (std::abs(evals(j + 1) - evals(j)) < 1e-10 && wj != wj1)
      out.degenerate = true;
  }
  for (int j = 0; j < r; ++j) {
    Eigen::VectorXd psi = solver.eigenvectors().col(j);
    int arg = 0;
    for (int i = 1; i < dim; ++i)
      if (std::abs(psi(i)) > std::abs(psi(arg))) arg = i;
    if (psi(arg) < 0) psi = -psi;
    out.state.gamma_n += w[j].get_d() * psi * psi.transpose();
    out.energy += w[j].get_d() * evals(j);
  }
  return out;
}

/// One-particle reduced density matrix gamma_pq = Tr[Gamma b+_q b_p]; the
/// trace equals the particle number.
inline Eigen::MatrixXd reduce_1rdm(const ManyBodyState& state) {
  const int d = state.basis.mode_count();
  const int dim = state.basis.size();
  Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(d, d);
  for (int c = 0; c < dim; ++c) {
    const auto occ = state.basis.state(c).occupation_vector();
    for (int p = 0; p < d; ++p) {
      if (occ[p] == 0) continue;
      std::vector<int> to = occ;
      --to[p];
      for (int q = 0; q < d; ++q) {
        ++to[q];
        const int cp = state.basis.index_of_occupation(to);
        --to[q];
        const double amp = std::sqrt(double(occ[p]) * double(to[q] + 1));
        gamma(p, q) += amp * state.gamma_n(c, cp);
      }
    }
  }
  return (gamma + gamma.transpose()) / 2.0;  // symmetrize away roundoff
}

inline std::vector<double> spectrum_desc(const Eigen::MatrixXd& gamma) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s(gamma);
  std::vector<double> v(s.eigenvalues().data(), s.eigenvalues().data() + gamma.rows());
  std::sort(v.begin(), v.end(), std::greater<double>());
  return v;
}

/// Floating-point majorization b ≺ a with additive slack on partial sums.
inline bool majorizes_desc_tol(std::vector<double> a, std::vector<double> b,
                               double tol = 1e-10) {
  std::sort(a.begin(), a.end(), std::greater<double>());
  std::sort(b.begin(), b.end(), std::greater<double>());
  double sa = 0, sb = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sa += a[k];
    sb += b[k];
    if (k + 1 < a.size() && sb > sa + tol) return false;
  }
  return std::abs(sa - sb) <= tol;
}

/// True when every pair of configuration energies under h differs by more
/// than `gap`: the ordering of the whole sector is then unambiguous.
inline bool field_is_generic(const std::vector<double>& h, int N, double gap = 1e-8) {
  const int d = static_cast<int>(h.size());
  for (int i = 1; i < d; ++i)
    if (h[i] <= h[i - 1]) return false;
  std::vector<double> energies;
  for (const auto& c : enumerate_configurations(N, d)) {
    double e = 0;
    for (int idx : c.indices()) e += h[idx - 1];
    energies.push_back(e);
  }
  std::sort(energies.begin(), energies.end());
  for (std::size_t i = 1; i < energies.size(); ++i)
    if (energies[i] - energies[i - 1] < gap) return false;
  return true;
}

/// Uniform [0,1] energies, sorted; resampled until generic.
inline std::vector<double> sample_generic_field(std::mt19937_64& rng, int N, int d,
                                                int max_attempts = 1000) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<double> h(d);
    for (auto& x : h) x = uni(rng);
    std::sort(h.begin(), h.end());
    if (field_is_generic(h, N)) return h;
  }
  throw DegeneracyError("failed to sample a generic field");
}

struct VertexSequenceReport {
  bool hit = false;
  int vertex_index = -1;
  double deviation = 0;  // max entry deviation against the matched vertex
  std::vector<double> spectrum;
};

/// Runs the vertex-generation sequence for a noninteracting field: the
/// sorted 1RDM spectrum of the ensemble minimizer must coincide with one of
/// the polytope vertices up to permutation, within `tol`.
inline VertexSequenceReport verify_vertex_sequence(
    const std::vector<double>& h, int N, const WeightVector& w,
    const SpectralPolytope* polytope = nullptr, double tol = 1e-10) {
  const int d = static_cast<int>(h.size());
  if (!field_is_generic(h, N))
    throw DegeneracyError("field must be strictly increasing and generic");
  const auto op = build_noninteracting(h, N);
  const auto gok = gok_minimizer(op, w);
  const auto gamma = reduce_1rdm(gok.state);
  VertexSequenceReport rep;
  rep.spectrum = spectrum_desc(gamma);
  SpectralPolytope local = polytope ? *polytope : build_vertices(N, d, w);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < local.vertices().size(); ++l) {
    const auto vs = sorted_desc(local.vertices()[l].coords);
    double dev = 0;
    for (int i = 0; i < d; ++i)
      dev = std::max(dev, std::abs(rep.spectrum[i] - vs[i].get_d()));
    if (dev < best) {
      best = dev;
      rep.vertex_index = static_cast<int>(l);
    }
  }
  rep.deviation = best;
  rep.hit = best <= tol;
  return rep;
}

struct SchurHornReport {
  bool diag_majorized = false;  // site occupations ≺ natural occupations
  bool spec_passes = false;
  bool diag_passes = false;
  bool transfer_ok = false;  // spec_passes implies diag_passes
};

/// Schur-Horn transfer: the diagonal of the 1RDM is majorized by its
/// spectrum, so the site occupations satisfy every exclusion constraint the
/// natural occupations do.
inline SchurHornReport schur_horn_check(const Eigen::MatrixXd& gamma,
                                        const HalfspaceSystem& sys) {
  const int d = static_cast<int>(gamma.rows());
  if (d != sys.d) throw DimensionError("1RDM dimension must match the system");
  std::vector<double> diag(d);
  for (int i = 0; i < d; ++i) diag[i] = gamma(i, i);
  const auto spec = spectrum_desc(gamma);
  SchurHornReport rep;
  rep.diag_majorized = majorizes_desc_tol(spec, diag);
  const Rat n_total = Rat(sys.N);
  rep.spec_passes = check_system(sys, Spectrum::from_doubles(spec, n_total));
  rep.diag_passes = check_system(sys, Spectrum::from_doubles(diag, n_total));
  rep.transfer_ok = !rep.spec_passes || rep.diag_passes;
  return rep;
}

}  // namespace bosepoly
