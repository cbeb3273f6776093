#include "hybridrange/core.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hybridrange {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& a) {
  require(a.rows() == a.cols(), "HermitianMatrix: input must be square");
  require(a.allFinite(), "HermitianMatrix: entries must be finite");
  mat_ = 0.5 * (a + a.adjoint());
}

HermitianMatrix HermitianMatrix::identity(Index n) {
  return HermitianMatrix(ComplexMatrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::zero(Index n) {
  return HermitianMatrix(ComplexMatrix::Zero(n, n));
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& d) {
  ComplexMatrix m = ComplexMatrix::Zero(d.size(), d.size());
  for (Index i = 0; i < d.size(); ++i) m(i, i) = d(i);
  return HermitianMatrix(m);
}

PartialIsometry::PartialIsometry(ComplexMatrix v, double tol) : mat_(std::move(v)) {
  require(mat_.rows() >= mat_.cols(), "PartialIsometry: more columns than rows");
  require(mat_.allFinite(), "PartialIsometry: entries must be finite");
  const Index k = mat_.cols();
  if (k == 0) return;
  double defect = (mat_.adjoint() * mat_ - ComplexMatrix::Identity(k, k)).norm();
  require(defect <= std::max(tol, kFrameDefectBound),
          "PartialIsometry: columns are not orthonormal at tolerance");
  if (defect > 1e-13) {
    // Polish via the polar factor so the stored frame meets the 1e-12 bound.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(mat_.adjoint() * mat_);
    ComplexMatrix isqrt = es.eigenvectors() *
                          es.eigenvalues().cwiseMax(1e-30).cwiseSqrt().cwiseInverse().asDiagonal() *
                          es.eigenvectors().adjoint();
    mat_ = mat_ * isqrt;
  }
}

PartialIsometry PartialIsometry::coordinate_frame(Index n, const std::vector<Index>& columns) {
  ComplexMatrix v = ComplexMatrix::Zero(n, static_cast<Index>(columns.size()));
  for (Index j = 0; j < v.cols(); ++j) {
    require(columns[static_cast<size_t>(j)] >= 0 && columns[static_cast<size_t>(j)] < n,
            "coordinate_frame: index out of range");
    v(columns[static_cast<size_t>(j)], j) = 1.0;
  }
  return PartialIsometry(std::move(v));
}

PartialIsometry PartialIsometry::identity(Index n) {
  return PartialIsometry(ComplexMatrix::Identity(n, n));
}

std::pair<HermitianMatrix, HermitianMatrix> hermitian_decompose(const ComplexMatrix& a) {
  require(a.rows() == a.cols(), "hermitian_decompose: input must be square");
  ComplexMatrix h1 = 0.5 * (a + a.adjoint());
  ComplexMatrix h2 = (a - a.adjoint()) / Complex(0.0, 2.0);
  return {HermitianMatrix(h1), HermitianMatrix(h2)};
}

Spectrum eig_hermitian(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix());
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver failed to converge");
  const Index n = h.dim();

  // Eigen returns ascending order; flip to descending but keep the solver's
  // relative order inside exact ties so diagonal inputs stay coordinate-aligned.
  std::vector<Index> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), Index{0});
  std::stable_sort(idx.begin(), idx.end(), [&](Index a, Index b) {
    return es.eigenvalues()(a) > es.eigenvalues()(b);
  });

  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors.resize(n, n);
  for (Index j = 0; j < n; ++j) {
    s.eigenvalues(j) = es.eigenvalues()(idx[static_cast<size_t>(j)]);
    ComplexVector col = es.eigenvectors().col(idx[static_cast<size_t>(j)]);
    for (Index i = 0; i < n; ++i) {
      if (std::abs(col(i)) > 1e-12) {
        col *= std::conj(col(i)) / std::abs(col(i));
        break;
      }
    }
    s.eigenvectors.col(j) = col;
  }
  return s;
}

ComplexMatrix compress(const ComplexMatrix& a, const PartialIsometry& v) {
  require(a.rows() == a.cols(), "compress: operator must be square");
  require(a.rows() == v.ambient_dim(), "compress: frame dimension mismatch");
  return v.matrix().adjoint() * a * v.matrix();
}

HermitianMatrix compress(const HermitianMatrix& a, const PartialIsometry& v) {
  return HermitianMatrix(compress(a.matrix(), v));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      c.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return c;
}

PartialIsometry orthonormalize(const ComplexMatrix& columns, double tol) {
  require(columns.cols() > 0, "orthonormalize: empty input");
  const Index n = columns.rows();
  ComplexMatrix work = columns;
  double max_norm = 0.0;
  for (Index j = 0; j < work.cols(); ++j) max_norm = std::max(max_norm, work.col(j).norm());
  const double threshold = tol * max_norm;

  ComplexMatrix q(n, std::min(n, work.cols()));
  std::vector<bool> used(static_cast<size_t>(work.cols()), false);
  Index r = 0;
  while (r < q.cols()) {
    Index pivot = -1;
    double best = threshold;
    for (Index j = 0; j < work.cols(); ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      double nrm = work.col(j).norm();
      if (nrm > best) {  // strict: ties keep the lowest index
        best = nrm;
        pivot = j;
      }
    }
    if (pivot < 0) break;
    used[static_cast<size_t>(pivot)] = true;
    ComplexVector v = work.col(pivot);
    // Second orthogonalization pass against the accepted basis for stability.
    if (r > 0) v -= q.leftCols(r) * (q.leftCols(r).adjoint() * v);
    double nrm = v.norm();
    if (nrm <= threshold) continue;
    v /= nrm;
    q.col(r) = v;
    for (Index j = 0; j < work.cols(); ++j)
      if (!used[static_cast<size_t>(j)]) work.col(j) -= v * (v.dot(work.col(j)));
    ++r;
  }
  return PartialIsometry(q.leftCols(r));
}

PartialIsometry orthonormalize(const std::vector<ComplexVector>& columns, double tol) {
  require(!columns.empty(), "orthonormalize: empty input");
  ComplexMatrix m(columns.front().size(), static_cast<Index>(columns.size()));
  for (size_t j = 0; j < columns.size(); ++j) {
    require(columns[j].size() == m.rows(), "orthonormalize: mixed vector dimensions");
    m.col(static_cast<Index>(j)) = columns[j];
  }
  return orthonormalize(m, tol);
}

PartialIsometry orthonormal_complement(const PartialIsometry& v, double tol) {
  const Index n = v.ambient_dim();
  const Index k = v.frame_dim();
  if (k == n) return PartialIsometry(ComplexMatrix::Zero(n, 0));
  ComplexMatrix residual = ComplexMatrix::Identity(n, n) -
                           v.matrix() * v.matrix().adjoint();
  PartialIsometry q = orthonormalize(residual, tol);
  if (q.frame_dim() != n - k)
    throw std::runtime_error("orthonormal_complement: rank defect while completing basis");
  return q;
}

double trace_inner(const HermitianMatrix& a, const HermitianMatrix& b) {
  return (a.matrix() * b.matrix()).trace().real();
}

namespace {

// Numerical rank of a Hermitian PSD Gram matrix: eigenvalues above
// tol * (largest eigenvalue).
Index gram_rank(const RealMatrix& gram, double tol) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(gram);
  double top = es.eigenvalues().cwiseAbs().maxCoeff();
  if (top <= 0.0) return 0;
  Index r = 0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > tol * top) ++r;
  return r;
}

}  // namespace

SpanBasis real_span_basis(const std::vector<HermitianMatrix>& ops, double tol) {
  SpanBasis out;
  if (ops.empty()) {
    out.coords.resize(0, 1);
    return out;
  }
  const Index n = ops.front().dim();
  for (const auto& op : ops)
    require(op.dim() == n, "real_span_basis: mixed dimensions");

  std::vector<HermitianMatrix> accepted;  // raw accepted inputs
  accepted.push_back(HermitianMatrix::identity(n));
  for (const auto& op : ops) {
    std::vector<const HermitianMatrix*> cand;
    for (const auto& a : accepted) cand.push_back(&a);
    cand.push_back(&op);
    RealMatrix gram(cand.size(), cand.size());
    for (size_t i = 0; i < cand.size(); ++i)
      for (size_t j = 0; j < cand.size(); ++j)
        gram(static_cast<Index>(i), static_cast<Index>(j)) = trace_inner(*cand[i], *cand[j]);
    if (gram_rank(gram, tol) == static_cast<Index>(cand.size())) accepted.push_back(op);
  }

  for (size_t i = 1; i < accepted.size(); ++i) {
    double mean = accepted[i].matrix().trace().real() / static_cast<double>(n);
    out.basis.emplace_back(accepted[i].matrix() -
                           mean * ComplexMatrix::Identity(n, n));
  }

  // Least-squares coordinates of every input over (basis..., I).
  const Index m = static_cast<Index>(out.basis.size());
  std::vector<const HermitianMatrix*> frame;
  for (const auto& b : out.basis) frame.push_back(&b);
  HermitianMatrix eye = HermitianMatrix::identity(n);
  frame.push_back(&eye);
  RealMatrix gram(m + 1, m + 1);
  for (Index i = 0; i <= m; ++i)
    for (Index j = 0; j <= m; ++j)
      gram(i, j) = trace_inner(*frame[static_cast<size_t>(i)], *frame[static_cast<size_t>(j)]);
  Eigen::LDLT<RealMatrix> solver(gram);
  out.coords.resize(static_cast<Index>(ops.size()), m + 1);
  for (size_t i = 0; i < ops.size(); ++i) {
    RealVector rhs(m + 1);
    for (Index j = 0; j <= m; ++j) rhs(j) = trace_inner(ops[i], *frame[static_cast<size_t>(j)]);
    out.coords.row(static_cast<Index>(i)) = solver.solve(rhs).transpose();
  }
  return out;
}

}  // namespace hybridrange
