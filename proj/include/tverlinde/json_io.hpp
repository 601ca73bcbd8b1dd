#pragma once

#include <json.hpp>

#include <algorithm>

#include "tverlinde/bethe.hpp"
#include "tverlinde/tqft.hpp"
#include "tverlinde/verify.hpp"

namespace tv {

using json = nlohmann::ordered_json;

inline json series_to_json(const Series& s) { return json(s.coeff_strings()); }

inline Series series_from_json(const json& j) {
  return Series::from_coeff_strings(j.get<std::vector<std::string>>());
}

/// {"group":"su2","level":k,"order":N,"metric":[...],"fusion":[{"labels":[a,b,c],
///  "series":[...]},...],"cap":[...],"twisted_cap":[...]}
/// Fusion is emitted sparsely: zero entries are omitted and only the sorted
/// representative of each symmetric triple is written.
inline json frobenius_to_json(const FrobeniusData& alg) {
  json j;
  j["group"] = "su2";
  j["level"] = alg.level;
  j["order"] = alg.order;
  json metric = json::array();
  for (const auto& s : alg.metric_diag) metric.push_back(series_to_json(s));
  j["metric"] = metric;
  json fusion = json::array();
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = a; b < alg.dim(); ++b)
      for (int c = b; c < alg.dim(); ++c) {
        const Series& f = alg.fusion_at(a, b, c);
        if (f.is_zero()) continue;
        fusion.push_back(json{{"labels", {a, b, c}}, {"series", series_to_json(f)}});
      }
  j["fusion"] = fusion;
  json cap = json::array();
  for (const auto& s : alg.cap) cap.push_back(series_to_json(s));
  j["cap"] = cap;
  json tcap = json::array();
  for (const auto& s : alg.twisted_cap) tcap.push_back(series_to_json(s));
  j["twisted_cap"] = tcap;
  return j;
}

inline FrobeniusData frobenius_from_json(const json& j) {
  if (j.at("group") != "su2") throw std::invalid_argument("frobenius_from_json: unknown group");
  const int k = j.at("level").get<int>();
  const int order = j.at("order").get<int>();
  FrobeniusData alg;
  alg.level = k;
  alg.order = order;
  for (int l = 0; l <= k; ++l) alg.basis.push_back(Weight{{l}, k});
  alg.dual.resize(static_cast<size_t>(k + 1));
  for (int l = 0; l <= k; ++l) alg.dual[static_cast<size_t>(l)] = l;
  for (const auto& m : j.at("metric")) alg.metric_diag.push_back(series_from_json(m));
  for (const auto& m : alg.metric_diag) alg.d.push_back(m.inverse());
  const int dim = k + 1;
  alg.fusion.assign(static_cast<size_t>(dim * dim * dim), Series(order));
  for (const auto& e : j.at("fusion")) {
    auto lbl = e.at("labels").get<std::vector<int>>();
    Series s = series_from_json(e.at("series"));
    std::sort(lbl.begin(), lbl.end());
    do {
      alg.fusion_at(lbl[0], lbl[1], lbl[2]) = s;
    } while (std::next_permutation(lbl.begin(), lbl.end()));
  }
  for (const auto& c : j.at("cap")) alg.cap.push_back(series_from_json(c));
  for (const auto& c : j.at("twisted_cap")) alg.twisted_cap.push_back(series_from_json(c));
  return alg;
}

inline json roots_to_json(const std::vector<BetheRoot>& roots) {
  json arr = json::array();
  for (const auto& r : roots) {
    json e;
    e["branch"] = r.branch.coords;
    json xi = json::array();
    for (Real x : r.point.xi()) xi.push_back(static_cast<double>(x));
    e["xi"] = xi;
    if (r.point.sigma.size() == 2) e["theta"] = static_cast<double>(r.point.angle());
    e["residual"] = static_cast<double>(r.residual);
    arr.push_back(e);
  }
  return arr;
}

inline json index_to_json(const IndexResult& res) {
  json j;
  j["value"] = static_cast<double>(res.value);
  json per = json::array();
  for (size_t i = 0; i < res.per_root.size(); ++i) {
    per.push_back(json{{"branch", res.branches[i].coords},
                       {"re", static_cast<double>(res.per_root[i].real())},
                       {"im", static_cast<double>(res.per_root[i].imag())}});
  }
  j["per_root_contributions"] = per;
  return j;
}

inline json report_to_json(const SuiteReport& rep) {
  json j;
  j["all_pass"] = rep.all_pass();
  json items = json::array();
  for (const auto& i : rep.items) {
    items.push_back(json{{"name", i.name},
                         {"criterion", i.criterion},
                         {"pass", i.pass},
                         {"max_dev", static_cast<double>(i.max_dev)},
                         {"note", i.note}});
  }
  j["items"] = items;
  return j;
}

}  // namespace tv
