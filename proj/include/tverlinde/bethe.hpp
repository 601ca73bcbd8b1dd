#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tverlinde/lie.hpp"

namespace tv {

using Real = long double;
using Complex = std::complex<Real>;

/// Thrown when Newton tracking diverges or two branches collide; carries the
/// branch label and the t where tracking failed.  CLI maps this to exit code 3.
class NumericError : public std::runtime_error {
 public:
  NumericError(std::string msg, Weight branch, Real t_fail)
      : std::runtime_error(std::move(msg)), branch(std::move(branch)), t(t_fail) {}
  Weight branch;
  Real t;
};

/// Point of the maximal torus: f = exp(2 pi i xi), stored as the traceless
/// e-basis vector sigma of length N.  xi() exposes the first N-1 coordinates.
struct TorusPoint {
  std::vector<Real> sigma;

  std::vector<Real> xi() const { return {sigma.begin(), sigma.end() - 1}; }
  /// SU(2) only: the angle of Eq-free parametrization f = diag(e^{i theta}, e^{-i theta}).
  Real angle() const;
  bool is_regular(Real eps = 1e-9L) const;
  Real min_root_gap() const;  // min over roots of dist(sigma_a - sigma_b, Z)
};

/// A solution of the deformed fixed-point equations at a concrete t, tagged by
/// the t=0 weight it continues from.
struct BetheRoot {
  TorusPoint point;
  Weight branch;
  Real t = 0.0L;
  Real residual = 0.0L;
};

struct ContinuationOptions {
  int steps = 64;
  Real t_max = 0.5L;
  Real newton_tol = 1e-14L;
  Real residual_guarantee = 1e-12L;
  int max_newton_iters = 50;
  int max_halvings = 10;
  Real collision_eps = 1e-6L;
};

struct IndexRequest {
  int genus = 0;
  int R = 2;
  std::vector<std::pair<Weight, ParabolicSpec>> punctures;
  Real t = 0.0L;
  int level = 0;
  ContinuationOptions options{};
};

struct IndexResult {
  Real value = 0.0L;
  Real max_imag = 0.0L;  // size of the discarded imaginary part, a sanity diagnostic
  std::vector<Weight> branches;
  std::vector<Complex> per_root;
};

/// Exact t=0 seeds: sigma = (lambda + rho) / (k + h) for each lambda in Lambda_k.
std::vector<BetheRoot> solve_t0(const RootSystem& rs, int k);

/// Newton continuation of all branches from t=0 to t_target on a shared grid,
/// with pairwise collision monitoring.  Results come back in branch order.
std::vector<BetheRoot> continue_roots(const RootSystem& rs, int k,
                                      const std::vector<BetheRoot>& roots_t0, Real t_target,
                                      const ContinuationOptions& opts = {});

/// Convenience: solve_t0 + continue_roots.
std::vector<BetheRoot> solve_roots(const RootSystem& rs, int k, Real t,
                                   const ContinuationOptions& opts = {});

/// Residual of the defining real equation system at sigma for the given branch.
std::vector<Real> bethe_residual(const RootSystem& rs, int k, Real t, const TorusPoint& p,
                                 const Weight& branch);

/// |F| det H_t^dagger: N times the determinant (restricted to the traceless
/// slice) of the Hessian of the deformed potential in the sigma coordinates.
Real hessian_det(const RootSystem& rs, int k, Real t, const TorusPoint& p);

/// Gradient of D_t in sigma coordinates (for finite-difference cross-checks):
/// g_a = (k+h) sigma_a - (1/pi) sum_{b != a} arg(1 - t e^{2 pi i (s_a - s_b)}) - rho_a.
std::vector<Real> potential_gradient(const RootSystem& rs, int k, Real t, const TorusPoint& p);

/// theta_{t,R}(f) = (1-t)^{(R-1) rk} prod_alpha (1-e^alpha)(1-t e^alpha)^{R-1} / (|F| det H).
Real theta_tR(const RootSystem& rs, int k, Real t, int R, const TorusPoint& p);

/// Deformed character Theta_{lambda,P',t}(f); complex for N >= 3.
Complex deformed_character(const RootSystem& rs, int k, Real t, const Weight& lambda,
                           const ParabolicSpec& p, const TorusPoint& pt);

/// Theta'_{lambda,P',t}(f), the lambda_{-t} variant used for R <= 0.
Complex deformed_character_prime(const RootSystem& rs, int k, Real t, const Weight& lambda,
                                 const ParabolicSpec& p, const TorusPoint& pt);

/// Sum over all Bethe roots of theta_{t,R}^{1-g} times the puncture characters
/// (Theta' when R <= 0).  The value is the real part; max_imag reports the
/// numerically discarded imaginary part.
IndexResult index(const RootSystem& rs, const IndexRequest& req);

/// Same, reusing already-continued roots.
IndexResult index_at_roots(const RootSystem& rs, const IndexRequest& req,
                           const std::vector<BetheRoot>& roots);

}  // namespace tv
