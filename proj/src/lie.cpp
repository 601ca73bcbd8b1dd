#include "tverlinde/lie.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tv {

std::string Weight::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  return os.str();
}

RootSystem::RootSystem(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("RootSystem: SU(N) needs N >= 2");
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) positive_roots_.emplace_back(i, j);
}

Weight RootSystem::rho() const { return Weight{std::vector<int>(static_cast<size_t>(rank()), 1), 0}; }

Weight RootSystem::highest_root_weight() const {
  std::vector<int> c(static_cast<size_t>(rank()), 0);
  if (rank() == 1) {
    c[0] = 2;
  } else {
    c.front() = 1;
    c.back() = 1;
  }
  return Weight{c, 0};
}

Rational RootSystem::form(const Weight& a, const Weight& b) const {
  Rational acc = 0;
  for (int i = 1; i <= rank(); ++i) {
    for (int j = 1; j <= rank(); ++j) {
      // (A^{-1})_{ij} = min(i,j) (N - max(i,j)) / N for A_{N-1}
      Rational g = ratio(std::min(i, j) * (n_ - std::max(i, j)), n_);
      acc += g * a.coords[static_cast<size_t>(i - 1)] * b.coords[static_cast<size_t>(j - 1)];
    }
  }
  return acc;
}

int RootSystem::level_pairing(const Weight& w) const {
  return std::accumulate(w.coords.begin(), w.coords.end(), 0);
}

bool RootSystem::is_dominant(const Weight& w) const {
  if (static_cast<int>(w.coords.size()) != rank()) return false;
  return std::all_of(w.coords.begin(), w.coords.end(), [](int c) { return c >= 0; });
}

bool RootSystem::is_integrable(const Weight& w, int k) const {
  return is_dominant(w) && level_pairing(w) <= k;
}

std::vector<Weight> RootSystem::integrable_weights(int k) const {
  if (k < 0) throw std::invalid_argument("integrable_weights: negative level");
  std::vector<Weight> out;
  std::vector<int> c(static_cast<size_t>(rank()), 0);
  // odometer over coordinates with sum <= k, then sort lexicographically
  while (true) {
    if (std::accumulate(c.begin(), c.end(), 0) <= k) out.push_back(Weight{c, k});
    int i = rank() - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == k) {
      c[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++c[static_cast<size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight RootSystem::dual_weight(const Weight& w) const {
  Weight out = w;
  std::reverse(out.coords.begin(), out.coords.end());
  return out;
}

std::vector<Rational> RootSystem::e_coords(const Weight& w) const {
  // l_a = sum_{j >= a} coords_j, then subtract the mean to land in the traceless slice
  std::vector<Rational> l(static_cast<size_t>(n_), 0);
  for (int a = n_ - 2; a >= 0; --a)
    l[static_cast<size_t>(a)] = l[static_cast<size_t>(a + 1)] + w.coords[static_cast<size_t>(a)];
  Rational mean = std::accumulate(l.begin(), l.end(), Rational(0)) / n_;
  for (auto& x : l) x -= mean;
  return l;
}

std::vector<long double> RootSystem::e_coords_ld(const Weight& w) const {
  auto ex = e_coords(w);
  std::vector<long double> out(ex.size());
  for (size_t i = 0; i < ex.size(); ++i) out[i] = static_cast<long double>(ex[i].get_d());
  return out;
}

const std::vector<WeylElement>& RootSystem::weyl_group() const {
  if (!weyl_cache_.empty()) return weyl_cache_;
  if (n_ > weyl_cap) throw std::domain_error("Weyl enumeration too large");
  std::vector<int> p(static_cast<size_t>(n_));
  std::iota(p.begin(), p.end(), 0);
  do {
    int inv = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)]) ++inv;
    weyl_cache_.push_back(WeylElement{p, inv});
  } while (std::next_permutation(p.begin(), p.end()));
  return weyl_cache_;
}

std::vector<int> RootSystem::stabilizer_exponents(const Weight& w, int k) const {
  if (k <= 0) throw std::domain_error("stabilizer_exponents: k = 0 is the degenerate algebra");
  if (!is_integrable(w, k)) throw std::invalid_argument("stabilizer_exponents: weight not in Lambda_k");
  // wall nodes on the affine cycle 0 - 1 - ... - (N-1) - 0
  std::vector<bool> wall(static_cast<size_t>(n_), false);
  for (int i = 0; i < rank(); ++i)
    if (w.coords[static_cast<size_t>(i)] == 0) wall[static_cast<size_t>(i + 1)] = true;
  if (level_pairing(w) == k) wall[0] = true;
  std::vector<int> exps;
  std::vector<bool> seen(static_cast<size_t>(n_), false);
  for (int v = 0; v < n_; ++v) {
    if (!wall[static_cast<size_t>(v)] || seen[static_cast<size_t>(v)]) continue;
    // walk the chain through v
    int size = 0;
    std::vector<int> stack{v};
    seen[static_cast<size_t>(v)] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++size;
      for (int y : {(x + 1) % n_, (x + n_ - 1) % n_}) {
        if (wall[static_cast<size_t>(y)] && !seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = true;
          stack.push_back(y);
        }
      }
    }
    for (int m = 1; m <= size; ++m) exps.push_back(m);  // SU(size+1) factor
  }
  while (static_cast<int>(exps.size()) < rank()) exps.push_back(0);  // torus directions
  std::sort(exps.begin(), exps.end());
  return exps;
}

Series RootSystem::d_lambda_series(const Weight& w, int k, int order) const {
  Series out = Series::one(order);
  for (int e : stabilizer_exponents(w, k))
    out = out * Series::geometric_inverse(order, e + 1);
  return out;
}

std::vector<std::pair<int, int>> RootSystem::roots_of_g_mod_p(const ParabolicSpec& p) const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [i, j] : positive_roots_) {
    // e_i - e_j lies in the Levi iff simple indices i..j-1 (0-based) are all in it
    bool in_levi = true;
    for (int a = i; a < j; ++a)
      if (!p.levi.count(a)) {
        in_levi = false;
        break;
      }
    if (!in_levi) out.emplace_back(i, j);
  }
  return out;
}

bool RootSystem::compatible(const Weight& w, const ParabolicSpec& p) const {
  for (int a : p.levi) {
    if (a < 0 || a >= rank()) return false;
    if (w.coords[static_cast<size_t>(a)] != 0) return false;
  }
  return true;
}

Weight parse_weight(const std::string& text, int level) {
  Weight w;
  w.level = level;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("parse_weight: bad coordinate '" + item + "'");
    w.coords.push_back(v);
  }
  if (w.coords.empty()) throw std::invalid_argument("parse_weight: empty weight");
  return w;
}

}  // namespace tv
