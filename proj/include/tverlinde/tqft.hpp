#pragma once

#include <string>
#include <vector>

#include "tverlinde/bethe.hpp"
#include "tverlinde/lie.hpp"
#include "tverlinde/series.hpp"

namespace tv {

/// The complex Verlinde Frobenius algebra over exact truncated series.
/// Basis = Lambda_k; eta is diagonal in the (lambda, lambda*) pairing with
/// eta^{lambda lambda*} = d_lambda^{-1}; the fusion tensor is totally symmetric.
struct FrobeniusData {
  int level = 0;
  int order = 0;
  std::vector<Weight> basis;
  std::vector<Series> fusion;       // dense (dim^3), index via fusion_at
  std::vector<Series> metric_diag;  // eta^{lambda lambda*} = d_lambda^{-1}
  std::vector<Series> d;            // d_lambda = metric_diag^{-1}
  std::vector<Series> cap;          // w_empty over the basis (the unit of the star product)
  std::vector<Series> twisted_cap;  // w_psi over the basis; empty when k < 2
  std::vector<int> dual;            // index of lambda* in the basis

  int dim() const { return static_cast<int>(basis.size()); }
  const Series& fusion_at(int a, int b, int c) const {
    return fusion[static_cast<size_t>((a * dim() + b) * dim() + c)];
  }
  Series& fusion_at(int a, int b, int c) {
    return fusion[static_cast<size_t>((a * dim() + b) * dim() + c)];
  }
  int index_of(const Weight& w) const;
};

/// Surface data for the TQFT evaluator: genus, ordered boundary labels and an
/// optional number of twisted-cap insertions (SU(2) only).
struct Surface {
  int genus = 0;
  std::vector<Weight> boundaries;
  int twisted_marks = 0;
};

/// The SU(2) algebra from the closed-form level-k data.  k = 0 yields the
/// one-dimensional degenerate algebra (eta^{00} = 1+t, f^{000} = 1,
/// w_empty = (1+t) w_0).
FrobeniusData su2_algebra(int k, int order);

/// Coefficient vector of w_{lambda} star w_{mu} over the basis.
std::vector<Series> star_product(const FrobeniusData& alg, const Weight& lambda, const Weight& mu);

/// State vectors over the basis under the star product.
std::vector<Series> star_vectors(const FrobeniusData& alg, const std::vector<Series>& u,
                                 const std::vector<Series>& v);

/// d_{g,n}(labels) as an exact series: fold the boundary labels and twisted
/// marks into one state with the star product, apply the handle element g
/// times, close with the counit.  Independence of the chosen decomposition is
/// checked by verify_frobenius, not assumed.
Series evaluate(const FrobeniusData& alg, const Surface& s);

struct FrobeniusCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct FrobeniusReport {
  std::vector<FrobeniusCheck> checks;
  bool all_pass() const;
};

/// Exact checks: total symmetry of f, associativity of star on all triples,
/// pairing compatibility <a*b, c> = <a, b*c>, the two d_{0,4} channel
/// decompositions, and that the cap acts as the unit.
FrobeniusReport verify_frobenius(const FrobeniusData& alg);

/// Numeric Frobenius tables at one t sample, built from the Bethe path:
/// f[a][b][c] = d_{0,3}(a,b,c), eta[a][b] = d_{0,2}(a,b) with Borel punctures.
struct NumericAlgebra {
  int level = 0;
  Real t = 0.0L;
  std::vector<Weight> basis;
  std::vector<int> dual;
  std::vector<Complex> fusion;  // dense dim^3, value of d_{0,3}
  std::vector<Complex> eta;     // dense dim^2, value of d_{0,2}
  std::vector<Complex> d;       // 1 / eta(lambda, lambda*)
  std::vector<Complex> cap;     // solves sum_mu cap_mu Theta_mu(f_i) = 1

  int dim() const { return static_cast<int>(basis.size()); }
  const Complex& fusion_at(int a, int b, int c) const {
    return fusion[static_cast<size_t>((a * dim() + b) * dim() + c)];
  }
  std::vector<Complex> star(int a, int b) const;
};

/// Build the numeric algebra from bethe.index values at each t sample.
std::vector<NumericAlgebra> algebra_from_bethe(const RootSystem& rs, int k,
                                               const std::vector<Real>& t_samples,
                                               const ContinuationOptions& opts = {});

}  // namespace tv
