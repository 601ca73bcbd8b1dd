#include "tverlinde/tqft.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tv {

namespace {

std::vector<Series> zero_state(const FrobeniusData& alg) {
  return std::vector<Series>(static_cast<size_t>(alg.dim()), Series(alg.order));
}

}  // namespace

int FrobeniusData::index_of(const Weight& w) const {
  for (int i = 0; i < dim(); ++i)
    if (basis[static_cast<size_t>(i)] == w) return i;
  throw std::invalid_argument("FrobeniusData: label '" + w.str() + "' not in Lambda_k");
}

FrobeniusData su2_algebra(int k, int order) {
  if (k < 0) throw std::invalid_argument("su2_algebra: negative level");
  FrobeniusData alg;
  alg.level = k;
  alg.order = order;
  for (int l = 0; l <= k; ++l) alg.basis.push_back(Weight{{l}, k});
  const int dim = k + 1;
  alg.dual.resize(static_cast<size_t>(dim));
  for (int l = 0; l <= k; ++l) alg.dual[static_cast<size_t>(l)] = l;  // w0 = -1 in rank 1

  if (k == 0) {
    // degenerate one-dimensional algebra
    alg.fusion.assign(1, Series::one(order));
    alg.metric_diag.assign(1, Series::polynomial(order, {{0, 1}, {1, 1}}));  // 1 + t
    alg.d.assign(1, alg.metric_diag[0].inverse());
    alg.cap.assign(1, Series::polynomial(order, {{0, 1}, {1, 1}}));  // (1+t) w_0
    return alg;
  }

  alg.fusion.assign(static_cast<size_t>(dim * dim * dim), Series(order));
  for (int a = 0; a <= k; ++a) {
    for (int b = 0; b <= k; ++b) {
      for (int c = 0; c <= k; ++c) {
        if ((a + b + c) % 2 == 1) continue;
        int d0 = a + b + c - 2 * k;
        int d1 = a - b - c;
        int d2 = b - c - a;
        int d3 = c - a - b;
        int dl = std::max(std::max(d0, d1), std::max(d2, d3));
        alg.fusion_at(a, b, c) =
            dl <= 0 ? Series::one(order) : Series::monomial(order, dl / 2);
      }
    }
  }

  alg.metric_diag.reserve(static_cast<size_t>(dim));
  alg.d.reserve(static_cast<size_t>(dim));
  for (int l = 0; l <= k; ++l) {
    // diag{1-t^2, 1-t, ..., 1-t, 1-t^2}
    int m = (l == 0 || l == k) ? 2 : 1;
    alg.metric_diag.push_back(Series::polynomial(order, {{0, 1}, {m, -1}}));
    alg.d.push_back(Series::geometric_inverse(order, m));
  }

  alg.cap = std::vector<Series>(static_cast<size_t>(dim), Series(order));
  if (k == 1) {
    // level 1 has no w_2; the unit is (1-t^2) w_0
    alg.cap[0] = Series::polynomial(order, {{0, 1}, {2, -1}});
  } else {
    alg.cap[0] = Series::one(order);
    alg.cap[2] = Series::monomial(order, 1, -1);
  }

  if (k >= 2) {
    alg.twisted_cap = std::vector<Series>(static_cast<size_t>(dim), Series(order));
    alg.twisted_cap[static_cast<size_t>(k)] = Series::one(order);
    alg.twisted_cap[static_cast<size_t>(k - 2)] = Series::monomial(order, 1, -1);
  }
  return alg;
}

std::vector<Series> star_vectors(const FrobeniusData& alg, const std::vector<Series>& u,
                                 const std::vector<Series>& v) {
  auto out = zero_state(alg);
  for (int a = 0; a < alg.dim(); ++a) {
    if (u[static_cast<size_t>(a)].is_zero()) continue;
    for (int b = 0; b < alg.dim(); ++b) {
      if (v[static_cast<size_t>(b)].is_zero()) continue;
      Series uv = u[static_cast<size_t>(a)] * v[static_cast<size_t>(b)];
      for (int c = 0; c < alg.dim(); ++c) {
        // (a * b)_c = f^{a b c*} d_c
        const Series& f = alg.fusion_at(a, b, alg.dual[static_cast<size_t>(c)]);
        if (f.is_zero()) continue;
        out[static_cast<size_t>(c)] += uv * f * alg.d[static_cast<size_t>(c)];
      }
    }
  }
  return out;
}

std::vector<Series> star_product(const FrobeniusData& alg, const Weight& lambda,
                                 const Weight& mu) {
  auto u = zero_state(alg);
  auto v = zero_state(alg);
  u[static_cast<size_t>(alg.index_of(lambda))] = Series::one(alg.order);
  v[static_cast<size_t>(alg.index_of(mu))] = Series::one(alg.order);
  return star_vectors(alg, u, v);
}

namespace {

std::vector<Series> handle_element(const FrobeniusData& alg) {
  auto h = zero_state(alg);
  for (int l = 0; l < alg.dim(); ++l) {
    auto u = zero_state(alg);
    u[static_cast<size_t>(l)] = Series::one(alg.order);
    auto v = zero_state(alg);
    v[static_cast<size_t>(alg.dual[static_cast<size_t>(l)])] = Series::one(alg.order);
    auto prod = star_vectors(alg, u, v);
    for (int c = 0; c < alg.dim(); ++c)
      h[static_cast<size_t>(c)] += prod[static_cast<size_t>(c)] * alg.d[static_cast<size_t>(l)];
  }
  return h;
}

Series counit(const FrobeniusData& alg, const std::vector<Series>& u) {
  // eps(w_nu) = sum_mu cap_mu d_{0,2}(nu, mu) = cap_{nu*} eta^{nu nu*}
  Series out(alg.order);
  for (int nu = 0; nu < alg.dim(); ++nu) {
    const Series& c = alg.cap[static_cast<size_t>(alg.dual[static_cast<size_t>(nu)])];
    if (c.is_zero() || u[static_cast<size_t>(nu)].is_zero()) continue;
    out += u[static_cast<size_t>(nu)] * c * alg.metric_diag[static_cast<size_t>(nu)];
  }
  return out;
}

}  // namespace

Series evaluate(const FrobeniusData& alg, const Surface& s) {
  if (s.genus < 0) throw std::invalid_argument("evaluate: negative genus");
  if (s.twisted_marks < 0) throw std::invalid_argument("evaluate: negative twisted mark count");
  if (s.twisted_marks > 0 && alg.twisted_cap.empty())
    throw std::invalid_argument("evaluate: twisted marks need level >= 2");
  std::vector<Series> u = alg.cap;  // empty surface state = unit
  bool first = true;
  for (const auto& w : s.boundaries) {
    auto v = zero_state(alg);
    v[static_cast<size_t>(alg.index_of(w))] = Series::one(alg.order);
    u = first ? std::move(v) : star_vectors(alg, u, v);
    first = false;
  }
  for (int i = 0; i < s.twisted_marks; ++i) {
    u = first ? alg.twisted_cap : star_vectors(alg, u, alg.twisted_cap);
    first = false;
  }
  if (s.genus > 0) {
    auto h = handle_element(alg);
    for (int g = 0; g < s.genus; ++g) u = star_vectors(alg, u, h);
  }
  return counit(alg, u);
}

bool FrobeniusReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

FrobeniusReport verify_frobenius(const FrobeniusData& alg) {
  FrobeniusReport rep;
  const int dim = alg.dim();

  {
    FrobeniusCheck c{"fusion totally symmetric", true, ""};
    for (int a = 0; a < dim && c.pass; ++a)
      for (int b = 0; b < dim && c.pass; ++b)
        for (int x = 0; x < dim && c.pass; ++x) {
          const Series& f = alg.fusion_at(a, b, x);
          if (!(f == alg.fusion_at(a, x, b) && f == alg.fusion_at(b, a, x) &&
                f == alg.fusion_at(x, b, a))) {
            c.pass = false;
            std::ostringstream os;
            os << "asymmetric at (" << a << "," << b << "," << x << ")";
            c.detail = os.str();
          }
        }
    rep.checks.push_back(std::move(c));
  }

  auto basis_state = [&](int i) {
    std::vector<Series> u(static_cast<size_t>(dim), Series(alg.order));
    u[static_cast<size_t>(i)] = Series::one(alg.order);
    return u;
  };

  {
    FrobeniusCheck c{"star associativity", true, ""};
    for (int a = 0; a < dim && c.pass; ++a) {
      for (int b = 0; b < dim && c.pass; ++b) {
        auto ab = star_vectors(alg, basis_state(a), basis_state(b));
        for (int x = 0; x < dim && c.pass; ++x) {
          auto lhs = star_vectors(alg, ab, basis_state(x));
          auto bx = star_vectors(alg, basis_state(b), basis_state(x));
          auto rhs = star_vectors(alg, basis_state(a), bx);
          for (int y = 0; y < dim; ++y) {
            if (!(lhs[static_cast<size_t>(y)] == rhs[static_cast<size_t>(y)])) {
              c.pass = false;
              std::ostringstream os;
              os << "(" << a << "*" << b << ")*" << x << " != " << a << "*(" << b << "*" << x
                 << ") in component " << y;
              c.detail = os.str();
              break;
            }
          }
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  auto pairing = [&](const std::vector<Series>& u, const std::vector<Series>& v) {
    Series out(alg.order);
    for (int nu = 0; nu < dim; ++nu) {
      const Series& a = u[static_cast<size_t>(nu)];
      const Series& b = v[static_cast<size_t>(alg.dual[static_cast<size_t>(nu)])];
      if (a.is_zero() || b.is_zero()) continue;
      out += a * b * alg.metric_diag[static_cast<size_t>(nu)];
    }
    return out;
  };

  {
    FrobeniusCheck c{"pairing compatibility", true, ""};
    for (int a = 0; a < dim && c.pass; ++a)
      for (int b = 0; b < dim && c.pass; ++b)
        for (int x = 0; x < dim && c.pass; ++x) {
          auto lhs = pairing(star_vectors(alg, basis_state(a), basis_state(b)), basis_state(x));
          auto rhs = pairing(basis_state(a), star_vectors(alg, basis_state(b), basis_state(x)));
          if (!(lhs == rhs)) {
            c.pass = false;
            std::ostringstream os;
            os << "<" << a << "*" << b << "," << x << "> != <" << a << "," << b << "*" << x << ">";
            c.detail = os.str();
          }
        }
    rep.checks.push_back(std::move(c));
  }

  {
    FrobeniusCheck c{"d_{0,4} channel independence", true, ""};
    for (int l1 = 0; l1 < dim && c.pass; ++l1)
      for (int l2 = 0; l2 < dim && c.pass; ++l2)
        for (int l3 = 0; l3 < dim && c.pass; ++l3)
          for (int l4 = 0; l4 < dim && c.pass; ++l4) {
            // sum_m f^{l1 l2 m} d_m f^{m* l3 l4}, s channel vs t channel
            Series s_chan(alg.order), t_chan(alg.order);
            for (int m = 0; m < dim; ++m) {
              int md = alg.dual[static_cast<size_t>(m)];
              s_chan += alg.fusion_at(l1, l2, m) * alg.d[static_cast<size_t>(m)] *
                        alg.fusion_at(md, l3, l4);
              t_chan += alg.fusion_at(l1, l3, m) * alg.d[static_cast<size_t>(m)] *
                        alg.fusion_at(md, l2, l4);
            }
            if (!(s_chan == t_chan)) {
              c.pass = false;
              std::ostringstream os;
              os << "channels differ at (" << l1 << "," << l2 << "," << l3 << "," << l4 << ")";
              c.detail = os.str();
            }
          }
    rep.checks.push_back(std::move(c));
  }

  {
    FrobeniusCheck c{"cap is the unit", true, ""};
    for (int a = 0; a < dim && c.pass; ++a) {
      auto ua = star_vectors(alg, alg.cap, basis_state(a));
      for (int y = 0; y < dim; ++y) {
        Series want = y == a ? Series::one(alg.order) : Series(alg.order);
        if (!(ua[static_cast<size_t>(y)] == want)) {
          c.pass = false;
          c.detail = "cap * w_" + std::to_string(a) + " != w_" + std::to_string(a);
          break;
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  return rep;
}

std::vector<Complex> NumericAlgebra::star(int a, int b) const {
  std::vector<Complex> out(static_cast<size_t>(dim()), Complex(0.0L));
  for (int c = 0; c < dim(); ++c)
    out[static_cast<size_t>(c)] =
        fusion_at(a, b, dual[static_cast<size_t>(c)]) * d[static_cast<size_t>(c)];
  return out;
}

std::vector<NumericAlgebra> algebra_from_bethe(const RootSystem& rs, int k,
                                               const std::vector<Real>& t_samples,
                                               const ContinuationOptions& opts) {
  std::vector<NumericAlgebra> out;
  auto basis = rs.integrable_weights(k);
  const int dim = static_cast<int>(basis.size());
  for (Real t : t_samples) {
    NumericAlgebra na;
    na.level = k;
    na.t = t;
    na.basis = basis;
    na.dual.resize(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      Weight dw = rs.dual_weight(basis[static_cast<size_t>(i)]);
      na.dual[static_cast<size_t>(i)] =
          static_cast<int>(std::lower_bound(basis.begin(), basis.end(), dw) - basis.begin());
    }
    auto roots = solve_roots(rs, k, t, opts);
    // character table: rows = Bethe roots, columns = labels
    std::vector<Complex> theta(roots.size());
    std::vector<std::vector<Complex>> chi(roots.size(),
                                          std::vector<Complex>(static_cast<size_t>(dim)));
    for (size_t r = 0; r < roots.size(); ++r) {
      theta[r] = theta_tR(rs, k, t, 2, roots[r].point);
      for (int a = 0; a < dim; ++a)
        chi[r][static_cast<size_t>(a)] = deformed_character(
            rs, k, t, basis[static_cast<size_t>(a)], ParabolicSpec::borel(), roots[r].point);
    }
    na.eta.assign(static_cast<size_t>(dim * dim), Complex(0.0L));
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        Complex acc = 0.0L;
        for (size_t r = 0; r < roots.size(); ++r)
          acc += theta[r] * chi[r][static_cast<size_t>(a)] * chi[r][static_cast<size_t>(b)];
        na.eta[static_cast<size_t>(a * dim + b)] = acc;
      }
    na.fusion.assign(static_cast<size_t>(dim * dim * dim), Complex(0.0L));
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        for (int c = 0; c < dim; ++c) {
          Complex acc = 0.0L;
          for (size_t r = 0; r < roots.size(); ++r)
            acc += theta[r] * chi[r][static_cast<size_t>(a)] * chi[r][static_cast<size_t>(b)] *
                   chi[r][static_cast<size_t>(c)];
          na.fusion[static_cast<size_t>((a * dim + b) * dim + c)] = acc;
        }
    na.d.resize(static_cast<size_t>(dim));
    for (int a = 0; a < dim; ++a)
      na.d[static_cast<size_t>(a)] =
          Complex(1.0L) / na.eta[static_cast<size_t>(a * dim + na.dual[static_cast<size_t>(a)])];
    // cap: solve sum_mu cap_mu Theta_mu(f_r) = 1 over the root set
    {
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> A(roots.size(), dim);
      Eigen::Matrix<Complex, Eigen::Dynamic, 1> rhs(roots.size());
      for (size_t r = 0; r < roots.size(); ++r) {
        for (int a = 0; a < dim; ++a) A(static_cast<long>(r), a) = chi[r][static_cast<size_t>(a)];
        rhs(static_cast<long>(r)) = Complex(1.0L);
      }
      Eigen::Matrix<Complex, Eigen::Dynamic, 1> sol = A.fullPivLu().solve(rhs);
      na.cap.resize(static_cast<size_t>(dim));
      for (int a = 0; a < dim; ++a) na.cap[static_cast<size_t>(a)] = sol(a);
    }
    out.push_back(std::move(na));
  }
  return out;
}

}  // namespace tv
