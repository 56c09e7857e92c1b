#pragma once

#include <string>
#include <string_view>

#include "normlap/bounds.hpp"
#include "normlap/experiment.hpp"

namespace normlap {

inline constexpr std::string_view kReportCsvHeader =
    "n,m,d1,alpha,exact,t,b,h_star,p,q,r,bound,kind,theorem,theta_source,beta_source,theta,beta,"
    "value,rel_err_pct,hypotheses_ok,violated";

namespace detail {

inline const char* bound_label(std::size_t index) {
  switch (index) {
    case 0: return "t1_theta";
    case 1: return "t2_theta_beta";
    case 2: return "t1_p";
  }
  return "unknown";
}

inline std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace detail

inline std::string format_report_text(const BoundReport& r) {
  std::string out;
  auto line = [&out](const std::string& s) { out += s + '\n'; };
  std::string classes;
  if (r.graph_class.complete) classes += " complete";
  if (r.graph_class.bipartite) classes += " bipartite";
  if (r.graph_class.tree) classes += " tree";
  line("graph      n=" + std::to_string(r.n) + " m=" + std::to_string(r.m) +
       " d1=" + std::to_string(r.d1) + (classes.empty() ? "" : " [" + classes.substr(1) + "]"));
  line("alpha      " + format_value(r.alpha));
  line("exact      s*_alpha = " + format_value(r.exact));
  line("scalars    t=" + format_value(r.t) + " b=" + format_value(r.b) +
       " h*=" + (r.h_star ? std::to_string(*r.h_star) : std::string("-")));
  line("localize   P=" + format_value(r.P) + " Q=" + format_value(r.Q) + " R=" + format_value(r.R));
  if (r.degenerate) {
    line("complete graph: P = Q = R = n/(n-1); no bounds reported");
    return out;
  }
  for (std::size_t i = 0; i < r.bounds.size(); ++i) {
    const BoundValue& bv = r.bounds[i];
    std::string s = detail::bound_label(i);
    s.resize(14, ' ');
    s += std::string(to_string(bv.kind)) + " " + format_value(bv.value) +
         "  err=" + format_percent(r.relative_errors[i]) + "%  theta=" + to_string(bv.theta_source);
    if (bv.beta_source == BetaSource::R) s += " beta=R";
    if (!bv.hypotheses_ok) s += "  hypotheses violated: " + detail::join(bv.violated, ',');
    line(s);
  }
  return out;
}

inline std::string format_report_csv(const BoundReport& r) {
  std::string out(kReportCsvHeader);
  out += '\n';
  const std::string prefix =
      std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.d1) + ',' +
      format_value(r.alpha) + ',' + format_value(r.exact) + ',' + format_value(r.t) + ',' +
      format_value(r.b) + ',' + (r.h_star ? std::to_string(*r.h_star) : std::string(kNotApplicable)) +
      ',' + format_value(r.P) + ',' + format_value(r.Q) + ',' + format_value(r.R) + ',';
  if (r.degenerate) {
    out += prefix + "degenerate,NA,NA,NA,NA,NA,NA,NA,NA,NA,\n";
    return out;
  }
  for (std::size_t i = 0; i < r.bounds.size(); ++i) {
    const BoundValue& bv = r.bounds[i];
    out += prefix + detail::bound_label(i) + ',' + to_string(bv.kind) + ',' + to_string(bv.theorem) +
           ',' + to_string(bv.theta_source) + ',' + to_string(bv.beta_source) + ',' +
           format_value(bv.theta) + ',' +
           (bv.beta_source == BetaSource::R ? format_value(bv.beta) : std::string(kNotApplicable)) +
           ',' + format_value(bv.value) + ',' + format_percent(r.relative_errors[i]) + ',' +
           (bv.hypotheses_ok ? "true" : "false") + ',' + detail::join(bv.violated, ';') + '\n';
  }
  return out;
}

}  // namespace normlap
