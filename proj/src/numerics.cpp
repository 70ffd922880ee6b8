#include "quditent/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "quditent/errors.hpp"

namespace quditent {

Tolerances& Tolerances::global() {
  static Tolerances t;
  return t;
}

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

std::vector<double> Spectrum::clamped(double clip) const {
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) {
    if (v < -clip) fail(Errc::negative_input, "eigenvalue " + std::to_string(v) + " below -" + std::to_string(clip));
    out.push_back(v < 0.0 ? 0.0 : v);
  }
  return out;
}

namespace {

double off_diagonal_sq(const CMatrix& a) {
  double s = 0.0;
  const int n = a.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += std::norm(a(i, j));
  return s;
}

// One complex Jacobi rotation annihilating a(p,q). The plane rotation
//   J[p][p] = c, J[p][q] = s e^{i phi}, J[q][p] = -s e^{-i phi}, J[q][q] = c
// with tan(2 theta) = 2|a_pq| / (a_qq - a_pp) is applied as A <- J† A J and
// accumulated into V <- V J.
void rotate(CMatrix& a, CMatrix& v, int p, int q) {
  const cx apq = a(p, q);
  const double abs_apq = std::abs(apq);
  if (abs_apq == 0.0) return;

  const cx phase = apq / abs_apq; // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * abs_apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const cx jpq = s * phase;             // J[p][q]
  const cx jqp = -s * std::conj(phase); // J[q][p]

  const int n = a.rows();
  // A <- A J (columns p, q)
  for (int i = 0; i < n; ++i) {
    const cx aip = a(i, p);
    const cx aiq = a(i, q);
    a(i, p) = c * aip + jqp * aiq;
    a(i, q) = jpq * aip + c * aiq;
  }
  // A <- J† A (rows p, q)
  for (int j = 0; j < n; ++j) {
    const cx apj = a(p, j);
    const cx aqj = a(q, j);
    a(p, j) = c * apj + std::conj(jqp) * aqj;
    a(q, j) = std::conj(jpq) * apj + c * aqj;
  }
  // V <- V J
  for (int i = 0; i < v.rows(); ++i) {
    const cx vip = v(i, p);
    const cx viq = v(i, q);
    v(i, p) = c * vip + jqp * viq;
    v(i, q) = jpq * vip + c * viq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
}

}  // namespace

Eigensystem hermitian_eigensystem(const CMatrix& h, double hermiticity_tol) {
  if (!h.square()) fail(Errc::non_square, "matrix is " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()));
  const double defect = h.hermiticity_defect();
  if (defect > hermiticity_tol)
    fail(Errc::non_hermitian, "Hermitian defect " + std::to_string(defect) + " exceeds tolerance");

  const int n = h.rows();
  // Work on the exactly-Hermitian part; the defect is within tolerance.
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

  CMatrix v = CMatrix::identity(n);

  double fro_sq = 0.0;
  for (const cx& e : a.data()) fro_sq += std::norm(e);
  const double stop = std::max(1e-60, 1e-28 * std::max(1.0, fro_sq));

  for (int sweep = 0; sweep < 60 && off_diagonal_sq(a) > stop; ++sweep) {
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return diag[i] > diag[j]; });

  Eigensystem es;
  es.values.resize(n);
  es.vectors = CMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    es.values[k] = diag[order[k]];
    for (int i = 0; i < n; ++i) es.vectors(i, k) = v(i, order[k]);
  }
  return es;
}

Spectrum hermitian_spectrum(const CMatrix& h, double hermiticity_tol) {
  return Spectrum{hermitian_eigensystem(h, hermiticity_tol).values};
}

double entropy_kernel(std::span<const double> values, double clip) {
  double h = 0.0;
  for (double v : values) {
    if (v < -clip) fail(Errc::negative_input, "entry " + std::to_string(v) + " below -" + std::to_string(clip));
    if (v > 0.0) h -= v * std::log(v);
  }
  return std::max(h, 0.0);
}

}  // namespace quditent
