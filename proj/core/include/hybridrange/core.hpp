#pragma once

#include <Eigen/Dense>

#include <complex>
#include <utility>
#include <vector>

namespace hybridrange {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Default relative tolerance for rank and orthonormality decisions.
inline constexpr double kDefaultRankTol = 1e-10;

/// Frobenius bound on V*V - I for every constructed frame.
inline constexpr double kFrameDefectBound = 1e-12;

/// Hermitian n x n matrix. Construction symmetrizes the input,
/// (A + A*)/2, so entry (i,j) is exactly the conjugate of entry (j,i);
/// downstream operator products accumulate rounding and are expected
/// to arrive only approximately Hermitian.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& a);

  static HermitianMatrix identity(Index n);
  static HermitianMatrix zero(Index n);
  static HermitianMatrix diagonal(const RealVector& d);

  Index dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

/// n x K matrix V with orthonormal columns (V*V = I_K). The constructor
/// rejects frames whose defect exceeds `tol` and polishes mild defects so
/// that every held frame satisfies ||V*V - I||_F <= 1e-12. K = 0 is valid.
class PartialIsometry {
 public:
  explicit PartialIsometry(ComplexMatrix v, double tol = kDefaultRankTol);

  static PartialIsometry coordinate_frame(Index n, const std::vector<Index>& columns);
  static PartialIsometry identity(Index n);

  Index ambient_dim() const { return mat_.rows(); }
  Index frame_dim() const { return mat_.cols(); }
  const ComplexMatrix& matrix() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

/// Eigendecomposition of a Hermitian matrix with eigenvalues in
/// non-increasing order and a deterministic eigenvector convention:
/// ties keep the solver's ascending positions and every column is
/// rescaled so its first component above 1e-12 in magnitude is real
/// and positive.
struct Spectrum {
  RealVector eigenvalues;     // descending
  ComplexMatrix eigenvectors; // unitary, column i pairs with eigenvalues[i]
};

/// Splits a square A into Hermitian parts (H1, H2) with A = H1 + i H2,
/// H1 = (A + A*)/2 and H2 = (A - A*)/(2i).
std::pair<HermitianMatrix, HermitianMatrix> hermitian_decompose(const ComplexMatrix& a);

Spectrum eig_hermitian(const HermitianMatrix& h);

/// Compression V*AV onto the frame's column span.
ComplexMatrix compress(const ComplexMatrix& a, const PartialIsometry& v);
/// Hermitian input yields Hermitian output (re-symmetrized).
HermitianMatrix compress(const HermitianMatrix& a, const PartialIsometry& v);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Orthonormal basis of the column span, column count equal to the
/// numerical rank at `tol` (relative to the largest input column norm).
/// Deterministic: modified Gram-Schmidt pivoting on the largest remaining
/// norm, ties resolved toward the lowest index.
PartialIsometry orthonormalize(const ComplexMatrix& columns, double tol = kDefaultRankTol);
PartialIsometry orthonormalize(const std::vector<ComplexVector>& columns,
                               double tol = kDefaultRankTol);

/// Orthonormal basis of the orthogonal complement of the frame's span.
PartialIsometry orthonormal_complement(const PartialIsometry& v,
                                       double tol = kDefaultRankTol);

/// Canonical real inner product on Hermitians, Re tr(AB*).
double trace_inner(const HermitianMatrix& a, const HermitianMatrix& b);

struct SpanBasis {
  /// Maximal tuple (A_1,...,A_m) with {A_1,...,A_m, I} linearly independent
  /// spanning span{inputs, I}; each element is an accepted input with its
  /// identity component removed.
  std::vector<HermitianMatrix> basis;
  /// coords(i, j) expresses input i over (basis..., I): the last column is
  /// the identity coefficient.
  RealMatrix coords;
};

/// Real-linear reduction of a family of Hermitians modulo the identity.
/// Rank decisions use the Gram matrix of the candidate set under the trace
/// inner product: a direction counts iff the smallest Gram eigenvalue stays
/// above tol times the largest.
SpanBasis real_span_basis(const std::vector<HermitianMatrix>& ops,
                          double tol = kDefaultRankTol);

}  // namespace hybridrange
