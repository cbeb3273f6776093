#pragma once

#include "hybridrange/range.hpp"

#include <cstdint>

namespace hybridrange {

/// Knobs for the frame-manifold feasibility search. The seed fully
/// determines a run; per-restart generators derive from (seed, restart
/// index) so thread scheduling cannot change results.
struct SearchOptions {
  int restarts = 64;
  int max_iters = 5000;
  double tol = 1e-8;
  double step = 0.1;
  std::uint64_t seed = 0;
};

struct SearchReport {
  Witness best;
  bool accepted = false;
  int restarts_used = 0;
  long iterations_total = 0;
  std::vector<double> residual_trace;  // final residual per restart run
  bool commuting_input = false;
};

/// Distance of the frame to the feasible set:
/// sqrt(sum_j ||V*A_jV - D_j* (x) I_k||_F^2) with D_j* the block-mean
/// minimizer. Zero iff (V, D*) is an exact witness.
double residual(const HermitianTuple& a, const PartialIsometry& v, int k, int p);

/// Alternating minimization from V0: closed-form D-step (block means) and a
/// projected-gradient V-step on the frame manifold with backtracking and
/// polar re-orthonormalization. The residual sequence is non-increasing;
/// stops at tol, max_iters, or relative improvement below 1e-14. Returns the
/// best iterate either way.
Witness refine(const HermitianTuple& a, const PartialIsometry& v0, int k, int p,
               const SearchOptions& opts = {});

/// Seeded multistart over frames drawn by orthonormalizing standard complex
/// Gaussian n x kp draws. Deterministic given the options; stops early once
/// a restart reaches tol. An accepted report re-verifies through
/// verify_witness before being returned. Restart count above 1 runs on the
/// thread pool capped by HYBRIDRANGE_THREADS.
SearchReport multistart(const HermitianTuple& a, int k, int p,
                        const SearchOptions& opts = {});

namespace detail {

/// Deterministic RNG used everywhere randomness is needed: raw mt19937_64
/// plus an explicit Box-Muller transform, so streams are identical across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  double uniform();   // [0, 1)
  double gaussian();  // standard normal

 private:
  std::uint64_t state_[2];
  std::uint64_t next_raw();
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

ComplexMatrix gaussian_matrix(Rng& rng, Index rows, Index cols);

PartialIsometry random_frame(Rng& rng, Index n, Index k);

}  // namespace detail

}  // namespace hybridrange
