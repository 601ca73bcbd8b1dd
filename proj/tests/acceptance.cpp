// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion.  Exit code = number of failed criteria.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "tverlinde/verify.hpp"

namespace {

const char* kCriterionText[9] = {
    "",
    "genus-0 values: Bethe index matches the closed polynomials (tol 1e-8)",
    "SU(2) cross-path: numeric index vs exact TQFT series (tol 1e-7 + tail, order 32)",
    "closed-form golden identities: exact series equality at order 32",
    "Frobenius axioms and gluing rules: exact SU(2) k<=6, numeric 1e-8 SU(3) k<=3",
    "orthogonality relations: both to 1e-8, SU(2) k<=6 and SU(3) k<=3",
    "classical limit: t=0 index equals the S-matrix oracle to 1e-9",
    "integrality/positivity: d_{g,n} coefficients for g>=2; genus-0 Poincare forms",
    "twisted-cap split identity: index part + higher part = whole, exact, even k<=8",
};

}  // namespace

int main() {
  tv::SuiteConfig cfg;  // defaults pin every tolerance from the contract
  tv::SuiteReport rep = tv::run_suite(cfg);

  std::map<int, std::vector<const tv::SuiteItem*>> by_criterion;
  for (const auto& item : rep.items) by_criterion[item.criterion].push_back(&item);

  int failed = 0;
  for (int c = 1; c <= 8; ++c) {
    bool pass = true;
    long double dev = 0.0L;
    std::string detail;
    for (const auto* item : by_criterion[c]) {
      pass = pass && item->pass;
      if (item->max_dev > dev) dev = item->max_dev;
      if (!item->pass) detail += item->name + (item->note.empty() ? "" : " [" + item->note + "]") + "; ";
    }
    std::printf("CRITERION %d: %-4s max_dev=%.3Le  %s\n", c, pass ? "PASS" : "FAIL", dev,
                kCriterionText[c]);
    if (!detail.empty()) std::printf("             %s\n", detail.c_str());
    if (!pass) ++failed;
  }

  int extra_failed = 0;
  for (const auto* item : by_criterion[0])
    if (!item->pass) ++extra_failed;
  std::printf("extra invariants: %zu checks, %d failed\n", by_criterion[0].size(), extra_failed);
  for (const auto* item : by_criterion[0])
    if (!item->pass)
      std::printf("  FAIL %s [%s]\n", item->name.c_str(), item->note.c_str());

  return failed + extra_failed;
}
