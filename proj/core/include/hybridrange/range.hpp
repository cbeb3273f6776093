#pragma once

#include "hybridrange/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hybridrange {

/// Tuple (A_1,...,A_m) of Hermitian matrices sharing one dimension.
/// m = 0 is allowed and carries only the ambient dimension.
class HermitianTuple {
 public:
  explicit HermitianTuple(Index dim) : dim_(dim) {}
  explicit HermitianTuple(std::vector<HermitianMatrix> mats);

  Index m() const { return static_cast<Index>(mats_.size()); }
  Index dim() const { return dim_; }
  const HermitianMatrix& operator[](Index j) const { return mats_[static_cast<size_t>(j)]; }
  const std::vector<HermitianMatrix>& matrices() const { return mats_; }

 private:
  Index dim_;
  std::vector<HermitianMatrix> mats_;
};

/// A certified member of the joint rank (k:p)-matricial range: a frame V of
/// width kp together with the m diagonal p x p blocks it compresses to.
/// D(j, r) is entry r of D_j. The residual is
/// sqrt(sum_j ||V*A_jV - D_j (x) I_k||_F^2) for the tuple it certifies.
struct Witness {
  PartialIsometry V;
  RealMatrix D;  // m x p
  int k = 0;
  int p = 0;
  double residual = 0.0;
  bool accepted = false;
};

/// Interval description of the single-matrix range: the ordered tuples
/// t_[1] >= ... >= t_[p] with lower(i) <= t_[i] <= upper(i), indexed from 1
/// in the math and 0 here. Any lower(i) > upper(i) certifies emptiness.
struct RangeBox {
  int k = 0;
  int p = 0;
  RealVector lower;
  RealVector upper;

  bool empty() const;
  bool contains(std::vector<double> t, double tol = 0.0) const;
};

/// n points in R^m; point j collects the j-th diagonal entries of a
/// commuting (diagonal) tuple.
struct DiagonalPointSet {
  RealMatrix points;  // n x m, row per point

  Index size() const { return points.rows(); }
  Index m() const { return points.cols(); }
};

enum class CertificateType { ExactInterlacing, ExactCommuting, OuterBound, SearchOnly };

const char* certificate_type_name(CertificateType t);

/// Outcome of a finder. `witness` is present iff something verified; when it
/// is absent, `certificate` tells whether the miss is a proof of emptiness
/// (one of the exact certificate types) or just an exhausted search.
struct FindResult {
  std::optional<Witness> witness;
  CertificateType certificate = CertificateType::SearchOnly;
  bool budget_exhausted = false;
  bool commuting_input = false;
  std::string note;
};

/// Residual-optimal witness for the given frame: each D_j entry is the mean
/// of the corresponding k x k diagonal block of V*A_jV, the exact minimizer
/// of the residual for fixed V. Accepted iff residual <= tol.
Witness verify_witness(const HermitianTuple& a, const PartialIsometry& v, int k, int p,
                       double tol = 1e-8);

/// Reorders sectors (columns of D together with the matching k-column groups
/// of V) lexicographically descending on (D_1,...,D_m) so set-valued outputs
/// compare across runs.
Witness canonicalize_witness(Witness w);

RangeBox single_range(const HermitianMatrix& a, int k, int p);

bool single_membership(const HermitianMatrix& a, int k, int p, const std::vector<double>& t,
                       double tol = 1e-9);

/// Constructs V with V*AV = diag(t) (x) I_k for a member t. The fast path
/// realizes each target from exact eigenvalue matches or 2x2 rotations of
/// outermost spectrum pairs; members that require mixing more than two
/// eigenvectors per column fall back to a chain of single-deletion
/// compressions driven by the interlacing inequalities.
Witness single_witness(const HermitianMatrix& a, int k, int p, const std::vector<double>& t);

/// True iff x lies within tol of conv{a_j : j in S} for every index subset of
/// size n-k+1. A false result certifies that x is outside the rank-k joint
/// range of the diagonal tuple. Refuses n choose (n-k+1) > 10^6.
bool diagonal_outer_test(const DiagonalPointSet& points, int k, const RealVector& x,
                         double tol = 1e-9);

/// Set-level form of the outer bound: certifies the rank-k range of a
/// diagonal tuple empty when the intersection of all hull sections is empty.
/// Exact for m <= 2 (interval scan / convex polygon clipping); returns
/// nullopt when no certificate is computable (m >= 3 or the subset count
/// exceeds 10^6).
std::optional<bool> diagonal_outer_empty(const DiagonalPointSet& points, int k);

struct DiagonalFindOptions {
  long max_leaves = 200000;  // assignments evaluated per Tverberg block
};

/// Tverberg-style feasibility search on a diagonal tuple: k disjoint support
/// sets per sector whose hulls share a point, sectors laid out on consecutive
/// coordinate blocks for p > 1. NotFound with budget_exhausted set is not an
/// emptiness certificate.
FindResult diagonal_find(const DiagonalPointSet& points, int k, int p,
                         const DiagonalFindOptions& opts = {});

/// Indicator-diagonal family separating the rank-kp range (empty) from the
/// (k:p) range (nonempty) inside the window p((m+1)k-m) <= n < (m+1)kp-m.
DiagonalPointSet separation_instance(int m, int k, int p, int n);

struct CommutingCluster {
  ComplexMatrix basis;  // n x multiplicity, orthonormal joint eigenvectors
  RealVector value;     // joint eigenvalue in R^m
};

struct CommutingResult {
  std::vector<Witness> witnesses;
  std::vector<CommutingCluster> clusters;
  /// True iff the cluster value vectors are affinely independent; then the
  /// enumeration decides emptiness exactly: witnesses exist iff
  /// sum_q floor(mult_q / k) >= p.
  bool exhaustive = false;
  long total_witness_count = 0;  // before the enumeration cap
};

struct CommutingFindOptions {
  double commute_tol = 1e-10;   // relative commutator bound
  double cluster_tol = 1e-8;    // relative to each matrix's spectral spread
  long max_witnesses = 64;
};

/// Exact solver for commuting tuples: simultaneous diagonalization by
/// iterative joint eigenspace refinement, clustering of the joint eigenvalue
/// vectors, then enumeration of sector multisets drawn from clusters of
/// multiplicity >= k (each cluster used at most floor(mult/k) times).
/// Throws on non-commuting input.
CommutingResult commuting_find(const HermitianTuple& a, int k, int p,
                               const CommutingFindOptions& opts = {});

bool is_commuting(const HermitianTuple& a, double tol = 1e-10);

/// Joint eigendecomposition of a commuting tuple (basis and per-column value
/// vectors), the change of basis behind commuting_find.
std::vector<CommutingCluster> joint_eigenclusters(const HermitianTuple& a,
                                                  const CommutingFindOptions& opts = {});

struct ConstructiveOptions {
  int base_restarts = 200;
  int base_max_iters = 2000;
  double tol = 1e-8;
  std::uint64_t seed = 0;
};

/// Recursive construction: a rank-k scalar compression U_1 (exact solvers
/// first, then multistart), a unitary split isolating span{U_1, A_j U_1},
/// and recursion on the complementary compressions with p-1; the assembled
/// frame is polished and re-verified. NotFound reports the failing depth and
/// never certifies emptiness by itself.
FindResult constructive_find(const HermitianTuple& a, int k, int p,
                             const ConstructiveOptions& opts = {});

/// Best known dimension guaranteeing a nonempty (k:p) range for any m-tuple:
/// (p+1)k-1 for m = 1, min{3pk-2, general} for m = 2, and the general bound
/// (m+1)((m+1)(k-1)+k(p-1)) otherwise; m = 0 means no constraints, so kp.
/// Results are floored at kp, the width any witness needs.
long long guarantee_dim(int m, int k, int p);

/// Linear reparametrization A_j -> sum_l T(l,j) A_l + c(j) I of a tuple.
HermitianTuple affine_transform(const HermitianTuple& a, const RealMatrix& t,
                                const RealVector& c);

}  // namespace hybridrange
