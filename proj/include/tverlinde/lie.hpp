#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tverlinde/series.hpp"

namespace tv {

/// Dominant weight of SU(N) in the fundamental-weight basis (length N-1),
/// remembering the level it is measured against when used as a label.
struct Weight {
  std::vector<int> coords;
  int level = 0;

  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator<(const Weight& o) const { return coords < o.coords; }
  std::string str() const;
};

/// Element of the Weyl group S_N: perm[i] is the image of letter i (0-based),
/// length is the inversion count, so sign = (-1)^length.
struct WeylElement {
  std::vector<int> perm;
  int length = 0;
};

/// Parabolic P' >= B described by the simple roots of its Levi factor
/// (0-based indices into alpha_1..alpha_{N-1}).  Empty set = Borel.
struct ParabolicSpec {
  std::set<int> levi;

  static ParabolicSpec borel() { return {}; }
};

/// Root data of type A_{N-1} with the Killing form normalized so every root
/// has norm squared 2.  Weights live in fundamental coordinates, roots are
/// index pairs (i,j) <-> e_i - e_j, i < j.
class RootSystem {
 public:
  explicit RootSystem(int n);

  int n() const { return n_; }                // the N of SU(N)
  int rank() const { return n_ - 1; }
  int dual_coxeter() const { return n_; }

  const std::vector<std::pair<int, int>>& positive_roots() const { return positive_roots_; }
  Weight rho() const;
  Weight highest_root_weight() const;         // theta in fundamental coordinates

  /// <.,.> on weights in fundamental coordinates: lambda^T A^{-1} mu with A the Cartan
  /// matrix; exact, (A^{-1})_{ij} = min(i,j)(N-max(i,j))/N.
  Rational form(const Weight& a, const Weight& b) const;

  /// <lambda, theta> = sum of fundamental coordinates (all comarks are 1 in type A).
  int level_pairing(const Weight& w) const;

  bool is_dominant(const Weight& w) const;
  bool is_integrable(const Weight& w, int k) const;

  /// All level-k integrable dominant weights, lexicographic on coordinates.
  std::vector<Weight> integrable_weights(int k) const;

  /// lambda* = -w0(lambda): coordinate reversal in type A.
  Weight dual_weight(const Weight& w) const;

  /// Traceless e-basis coordinates (length N) of a weight, exact.
  std::vector<Rational> e_coords(const Weight& w) const;
  std::vector<long double> e_coords_ld(const Weight& w) const;

  /// All N! Weyl elements with lengths; enumerated eagerly and cached.
  /// Throws std::domain_error("Weyl enumeration too large") for N > weyl_cap.
  const std::vector<WeylElement>& weyl_group() const;
  static constexpr int weyl_cap = 6;

  /// Exponents of H_lambda, the stabilizer of exp(2 pi i lambda^vee / k):
  /// wall nodes on the affine A_{N-1} diagram (node i>0 iff coords[i-1]=0,
  /// node 0 iff <lambda,theta>=k) decompose into chains; a chain of length m
  /// is an SU(m+1) factor contributing exponents 1..m, torus directions
  /// contribute 0.  The list always has length rank().
  /// Throws std::domain_error for k = 0 (degenerate algebra handles that case).
  std::vector<int> stabilizer_exponents(const Weight& w, int k) const;

  /// d_lambda = prod_i (1 - t^{m_i + 1})^{-1} over the stabilizer exponents.
  Series d_lambda_series(const Weight& w, int k, int order) const;

  /// Positive roots of g/p' (those not inside the Levi of the parabolic).
  std::vector<std::pair<int, int>> roots_of_g_mod_p(const ParabolicSpec& p) const;

  /// lambda is compatible with P' iff it is orthogonal to every Levi simple root.
  bool compatible(const Weight& w, const ParabolicSpec& p) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> positive_roots_;
  mutable std::vector<WeylElement> weyl_cache_;
};

/// Parse a weight from comma-separated fundamental coordinates, e.g. "2,1".
Weight parse_weight(const std::string& text, int level);

}  // namespace tv
