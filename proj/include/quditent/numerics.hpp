#pragma once

#include <span>
#include <vector>

#include "quditent/matrix.hpp"
#include "quditent/tolerances.hpp"

namespace quditent {

// Real eigenvalues of a Hermitian matrix, sorted descending. The sum of the
// values equals the trace of the source matrix to within 1e-10.
struct Spectrum {
  std::vector<double> values;

  double sum() const;

  // Entropy-ready copy: values in [-clip, 0) become 0; anything below -clip
  // throws NegativeInput (rounding noise is clamped, genuine negativity is not).
  std::vector<double> clamped(double clip = Tolerances::global().eigen_clip) const;
};

struct Eigensystem {
  std::vector<double> values; // descending
  CMatrix vectors;            // unitary, columns are eigenvectors: H = V diag(values) V†
};

// Cyclic complex Jacobi diagonalization. Rejects non-square input and input
// whose Hermitian defect exceeds hermiticity_tol.
Eigensystem hermitian_eigensystem(const CMatrix& h,
                                  double hermiticity_tol = Tolerances::global().hermiticity);

Spectrum hermitian_spectrum(const CMatrix& h,
                            double hermiticity_tol = Tolerances::global().hermiticity);

// -sum_i x_i ln x_i in nats, with 0 ln 0 = 0. Values in [-clip, 0) are treated
// as 0; values below -clip throw NegativeInput.
double entropy_kernel(std::span<const double> values,
                      double clip = Tolerances::global().eigen_clip);

}  // namespace quditent
