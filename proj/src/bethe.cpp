#include "tverlinde/bethe.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tv {

namespace {

constexpr Real kPi = 3.14159265358979323846264338327950288L;

using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

std::vector<Real> rho_e(int n) {
  std::vector<Real> r(static_cast<size_t>(n));
  for (int a = 1; a <= n; ++a) r[static_cast<size_t>(a - 1)] = (n + 1 - 2 * a) / 2.0L;
  return r;
}

/// arg(1 - t e^{i phi})
Real arg_kernel(Real t, Real phi) { return atan2l(-t * sinl(phi), 1.0L - t * cosl(phi)); }

/// d/dphi [-2 arg(1 - t e^{i phi})] = 2 (t cos phi - t^2) / |1 - t e^{i phi}|^2
Real curvature_kernel(Real t, Real phi) {
  Real c = cosl(phi);
  return 2.0L * (t * c - t * t) / (1.0L - 2.0L * t * c + t * t);
}

/// Hessian of D_t in the full sigma coordinates (N x N); the (1,..,1) direction
/// carries eigenvalue k+h.
Mat sigma_hessian(int n, int k, Real t, const std::vector<Real>& sigma) {
  Mat M = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    M(a, a) = static_cast<Real>(k + n);
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      Real c = curvature_kernel(t, 2.0L * kPi * (sigma[static_cast<size_t>(a)] -
                                                 sigma[static_cast<size_t>(b)]));
      M(a, a) += c;
      M(a, b) = -c;
    }
  }
  return M;
}

Real max_abs(const std::vector<Real>& v) {
  Real m = 0.0L;
  for (Real x : v) m = std::max(m, fabsl(x));
  return m;
}

/// One Newton solve at fixed t for the given branch, starting from sigma.
/// Returns false if it fails to reach tol within the iteration budget.
bool newton_at_t(const RootSystem& rs, int k, Real t, const Weight& branch,
                 std::vector<Real>& sigma, const ContinuationOptions& opts) {
  const int n = rs.n();
  TorusPoint p;
  for (int it = 0; it < opts.max_newton_iters; ++it) {
    p.sigma = sigma;
    auto F = bethe_residual(rs, k, t, p, branch);
    if (max_abs(F) < opts.newton_tol) return true;
    Mat M = sigma_hessian(n, k, t, sigma);
    // rows: difference of consecutive gradient components; columns: traceless basis
    Mat J(n - 1, n - 1);
    for (int a = 0; a < n - 1; ++a) {
      for (int c = 0; c < n - 1; ++c) {
        Real acc = 0.0L;
        for (int b = 0; b < n; ++b) {
          Real basis = (b == c ? 1.0L : 0.0L) - 1.0L / n;
          acc += (M(a, b) - M(a + 1, b)) * basis;
        }
        J(a, c) = acc;
      }
    }
    Vec rhs(n - 1);
    for (int a = 0; a < n - 1; ++a) rhs(a) = -F[static_cast<size_t>(a)];
    Vec du = J.fullPivLu().solve(rhs);
    for (int c = 0; c < n - 1; ++c) {
      for (int b = 0; b < n; ++b) {
        Real basis = (b == c ? 1.0L : 0.0L) - 1.0L / n;
        sigma[static_cast<size_t>(b)] += du(c) * basis;
      }
    }
  }
  p.sigma = sigma;
  return max_abs(bethe_residual(rs, k, t, p, branch)) < opts.newton_tol;
}

Real pair_distance(const std::vector<Real>& a, const std::vector<Real>& b) {
  Real m = 0.0L;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, fabsl(a[i] - b[i]));
  return m;
}

}  // namespace

Real TorusPoint::angle() const {
  if (sigma.size() != 2) throw std::invalid_argument("TorusPoint::angle: SU(2) only");
  return kPi * (sigma[0] - sigma[1]);
}

Real TorusPoint::min_root_gap() const {
  Real gap = 1.0L;
  for (size_t a = 0; a < sigma.size(); ++a) {
    for (size_t b = a + 1; b < sigma.size(); ++b) {
      Real x = sigma[a] - sigma[b];
      Real d = fabsl(x - roundl(x));
      gap = std::min(gap, d);
    }
  }
  return gap;
}

bool TorusPoint::is_regular(Real eps) const { return min_root_gap() > eps; }

std::vector<BetheRoot> solve_t0(const RootSystem& rs, int k) {
  if (k < 0) throw std::invalid_argument("solve_t0: negative level");
  const int n = rs.n();
  auto rho = rho_e(n);
  std::vector<BetheRoot> out;
  for (const auto& lam : rs.integrable_weights(k)) {
    BetheRoot r;
    r.branch = lam;
    r.t = 0.0L;
    auto le = rs.e_coords_ld(lam);
    r.point.sigma.resize(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a)
      r.point.sigma[static_cast<size_t>(a)] =
          (le[static_cast<size_t>(a)] + rho[static_cast<size_t>(a)]) / (k + n);
    r.residual = max_abs(bethe_residual(rs, k, 0.0L, r.point, lam));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Real> potential_gradient(const RootSystem& rs, int k, Real t, const TorusPoint& p) {
  const int n = rs.n();
  auto rho = rho_e(n);
  std::vector<Real> g(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    Real acc = (k + n) * p.sigma[static_cast<size_t>(a)] - rho[static_cast<size_t>(a)];
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      acc -= arg_kernel(t, 2.0L * kPi * (p.sigma[static_cast<size_t>(a)] -
                                         p.sigma[static_cast<size_t>(b)])) / kPi;
    }
    g[static_cast<size_t>(a)] = acc;
  }
  return g;
}

std::vector<Real> bethe_residual(const RootSystem& rs, int k, Real t, const TorusPoint& p,
                                 const Weight& branch) {
  auto g = potential_gradient(rs, k, t, p);
  std::vector<Real> F(static_cast<size_t>(rs.rank()));
  for (int a = 0; a < rs.rank(); ++a)
    F[static_cast<size_t>(a)] = g[static_cast<size_t>(a)] - g[static_cast<size_t>(a + 1)] -
                                branch.coords[static_cast<size_t>(a)];
  return F;
}

std::vector<BetheRoot> continue_roots(const RootSystem& rs, int k,
                                      const std::vector<BetheRoot>& roots_t0, Real t_target,
                                      const ContinuationOptions& opts) {
  if (t_target < 0.0L || t_target >= opts.t_max)
    throw std::domain_error("continue_roots: t outside continuation guard");
  std::vector<BetheRoot> roots = roots_t0;
  if (t_target == 0.0L) return roots;
  const int steps = std::max(1, opts.steps);
  for (int s = 1; s <= steps; ++s) {
    Real t_prev = t_target * (s - 1) / steps;
    Real t_next = t_target * s / steps;
    for (auto& r : roots) {
      // step halving on divergence
      int pieces = 1;
      int halvings = 0;
      bool done = false;
      while (!done) {
        auto sigma = r.point.sigma;
        bool ok = true;
        for (int q = 1; q <= pieces && ok; ++q) {
          Real tq = t_prev + (t_next - t_prev) * q / pieces;
          ok = newton_at_t(rs, k, tq, r.branch, sigma, opts);
        }
        if (ok) {
          r.point.sigma = sigma;
          done = true;
        } else if (++halvings > opts.max_halvings) {
          throw NumericError("Newton divergence tracking branch " + r.branch.str(), r.branch,
                             t_next);
        } else {
          pieces *= 2;
        }
      }
      r.t = t_next;
      r.residual = max_abs(bethe_residual(rs, k, t_next, r.point, r.branch));
      if (!r.point.is_regular())
        throw NumericError("branch " + r.branch.str() + " left the regular locus", r.branch,
                           t_next);
    }
    // collision monitor on the shared grid
    for (size_t i = 0; i < roots.size(); ++i) {
      for (size_t j = i + 1; j < roots.size(); ++j) {
        if (pair_distance(roots[i].point.sigma, roots[j].point.sigma) < opts.collision_eps)
          throw NumericError("branch collision between " + roots[i].branch.str() + " and " +
                                 roots[j].branch.str(),
                             roots[i].branch, t_next);
      }
    }
  }
  return roots;
}

std::vector<BetheRoot> solve_roots(const RootSystem& rs, int k, Real t,
                                   const ContinuationOptions& opts) {
  return continue_roots(rs, k, solve_t0(rs, k), t, opts);
}

Real hessian_det(const RootSystem& rs, int k, Real t, const TorusPoint& p) {
  if (!p.is_regular()) throw std::domain_error("hessian_det: point is not regular");
  const int n = rs.n();
  Mat M = sigma_hessian(n, k, t, p.sigma);
  return n * M.determinant() / (k + n);
}

Real theta_tR(const RootSystem& rs, int k, Real t, int R, const TorusPoint& p) {
  if (!p.is_regular()) throw std::domain_error("theta_tR: point is not regular");
  Real num = powl(1.0L - t, static_cast<Real>((R - 1) * rs.rank()));
  for (const auto& [a, b] : rs.positive_roots()) {
    Real x = p.sigma[static_cast<size_t>(a)] - p.sigma[static_cast<size_t>(b)];
    Real s = sinl(kPi * x);
    num *= 4.0L * s * s;
    Real q2 = 1.0L - 2.0L * t * cosl(2.0L * kPi * x) + t * t;  // |1 - t e^{2 pi i x}|^2
    num *= powl(q2, static_cast<Real>(R - 1));
  }
  return num / hessian_det(rs, k, t, p);
}

namespace {

Complex character_sum(const RootSystem& rs, Real t, const Weight& lambda,
                      const std::vector<std::pair<int, int>>& quotient_roots,
                      const TorusPoint& pt, bool prime) {
  const int n = rs.n();
  auto m = rs.e_coords_ld(lambda);
  Complex total = 0.0L;
  for (const auto& w : rs.weyl_group()) {
    Real phase = 0.0L;
    for (int b = 0; b < n; ++b)
      phase += m[static_cast<size_t>(b)] * pt.sigma[static_cast<size_t>(w.perm[static_cast<size_t>(b)])];
    Complex num = std::polar<Real>(1.0L, 2.0L * kPi * phase);
    Complex den = 1.0L;
    for (const auto& [i, j] : rs.positive_roots()) {
      Real x = pt.sigma[static_cast<size_t>(w.perm[static_cast<size_t>(i)])] -
               pt.sigma[static_cast<size_t>(w.perm[static_cast<size_t>(j)])];
      den *= Complex(1.0L) - std::polar<Real>(1.0L, -2.0L * kPi * x);
    }
    for (const auto& [i, j] : quotient_roots) {
      Real x = pt.sigma[static_cast<size_t>(w.perm[static_cast<size_t>(i)])] -
               pt.sigma[static_cast<size_t>(w.perm[static_cast<size_t>(j)])];
      Complex f = Complex(1.0L) - t * std::polar<Real>(1.0L, (prime ? -2.0L : 2.0L) * kPi * x);
      if (prime)
        num *= f;
      else
        den *= f;
    }
    total += num / den;
  }
  return total;
}

}  // namespace

Complex deformed_character(const RootSystem& rs, int k, Real t, const Weight& lambda,
                           const ParabolicSpec& p, const TorusPoint& pt) {
  if (!rs.is_integrable(lambda, k))
    throw std::invalid_argument("deformed_character: weight not in Lambda_k");
  if (!rs.compatible(lambda, p))
    throw std::invalid_argument("deformed_character: weight incompatible with parabolic");
  if (!pt.is_regular()) throw std::domain_error("deformed_character: point is not regular");
  return character_sum(rs, t, lambda, rs.roots_of_g_mod_p(p), pt, /*prime=*/false);
}

Complex deformed_character_prime(const RootSystem& rs, int k, Real t, const Weight& lambda,
                                 const ParabolicSpec& p, const TorusPoint& pt) {
  if (!rs.is_integrable(lambda, k))
    throw std::invalid_argument("deformed_character_prime: weight not in Lambda_k");
  if (!rs.compatible(lambda, p))
    throw std::invalid_argument("deformed_character_prime: weight incompatible with parabolic");
  if (!pt.is_regular()) throw std::domain_error("deformed_character_prime: point is not regular");
  return character_sum(rs, t, lambda, rs.roots_of_g_mod_p(p), pt, /*prime=*/true);
}

IndexResult index_at_roots(const RootSystem& rs, const IndexRequest& req,
                           const std::vector<BetheRoot>& roots) {
  for (const auto& [w, p] : req.punctures) {
    if (!rs.is_integrable(w, req.level))
      throw std::invalid_argument("index: puncture weight not in Lambda_k");
    if (!rs.compatible(w, p))
      throw std::invalid_argument("index: puncture weight incompatible with its parabolic");
  }
  IndexResult res;
  Complex total = 0.0L;
  for (const auto& r : roots) {
    Real th = theta_tR(rs, req.level, req.t, req.R, r.point);
    Complex contrib = powl(th, static_cast<Real>(1 - req.genus));
    for (const auto& [w, p] : req.punctures) {
      contrib *= req.R <= 0 ? deformed_character_prime(rs, req.level, req.t, w, p, r.point)
                            : deformed_character(rs, req.level, req.t, w, p, r.point);
    }
    total += contrib;
    res.branches.push_back(r.branch);
    res.per_root.push_back(contrib);
  }
  res.value = total.real();
  res.max_imag = fabsl(total.imag());
  return res;
}

IndexResult index(const RootSystem& rs, const IndexRequest& req) {
  return index_at_roots(rs, req, solve_roots(rs, req.level, req.t, req.options));
}

}  // namespace tv
