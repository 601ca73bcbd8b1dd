#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tverlinde/tqft.hpp"

namespace tv {

/// ---- Closed forms transcribed as exact rational expressions and expanded on
/// demand; series coefficients are never hand-copied. ----

/// prod_{i=1..rk}(1 - t^{2 m_i + 1}) with m_i = 1..N-1 the exponents of SU(N).
Series genus0_poincare(const RootSystem& rs, int order);

/// d_2 = (c_3 k^3 + c_2 k^2 + c_1 k + c_0) / (1-t)^3.
Series genus2_closed(int k, int order);

/// d_3 = (b_6 k^6 + ... + b_0) / (1-t)^6.
Series genus3_closed(int k, int order);

/// Four-punctured sphere.  Returns 0 when the label sum is odd.
Series d04_closed(int k, const std::array<int, 4>& lambdas, int order);

struct TwistedGenus2 {
  Series whole;        // the even-k closed form
  Series index_part;   // the bottom-component index (a'_3 k^3 + ... + a'_0)/(1-t)^3
  Series higher_part;  // the t^{k/2+2}-proportional critical-manifold terms
};

/// Twisted genus-2 closed form plus its two-part split.  k must be even.
TwistedGenus2 twisted_genus2_closed(int k, int order);

/// Independent classical oracle: the level-k SU(2) Verlinde number from the
/// S-matrix, sum_j S_{0j}^{2-2g} prod_i (S_{lambda_i j}/S_{0j}).
Real su2_classical_verlinde(int k, int genus, const std::vector<int>& labels);

/// ---- Identity suite ----

struct SuiteConfig {
  int order = 32;
  int su2_kmax = 6;
  int su3_kmax = 3;
  int genus_max = 3;
  int boundaries_max = 4;
  std::vector<Real> t_list{0.05L, 0.1L};
  std::vector<Real> genus0_t{0.05L, 0.1L, 0.15L};
  Real tol_numeric = 1e-8L;
  Real tol_cross = 1e-7L;
  Real tol_classical = 1e-9L;
  Real tol_residual = 1e-12L;
  bool parallel = true;
};

struct SuiteItem {
  std::string name;
  int criterion = 0;  // 1..8 for acceptance items, 0 for extra invariants
  bool pass = false;
  long double max_dev = 0.0L;
  std::string note;
};

struct SuiteReport {
  std::vector<SuiteItem> items;
  bool all_pass() const;
  std::string table() const;
};

/// Every criterion plus the extra module invariants, run (optionally in
/// parallel) with a deterministic report order.  Items carry the acceptance
/// criterion they back (0 = extra invariant), so per-criterion views are a
/// filter over one run.
SuiteReport run_suite(const SuiteConfig& cfg);

/// Memoizing exact evaluator for SU(2): one algebra, cached handle element,
/// results keyed by (genus, sorted labels, twisted marks).
class Su2Evaluator {
 public:
  Su2Evaluator(int k, int order);
  const FrobeniusData& algebra() const { return alg_; }
  /// labels need not be sorted; the value only depends on the multiset.
  const Series& value(int genus, std::vector<int> labels, int twisted = 0);

 private:
  FrobeniusData alg_;
  std::vector<Series> handle_;
  std::map<std::tuple<int, std::vector<int>, int>, Series> memo_;
};

}  // namespace tv
