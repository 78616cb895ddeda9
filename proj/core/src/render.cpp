#include "qconcav/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qconcav {

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format: " + name);
}

std::string format_g17(double v) {
  if (v == 0.0) return "0";  // never emit "-0"
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string jnum(double v) {
  if (!std::isfinite(v)) return "\"inf\"";
  return format_g17(v);
}

std::string jstr(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string jbool(bool b) { return b ? "true" : "false"; }

std::string report_json(const BoundReport& r) {
  std::string s = "{";
  s += "\"dim\":" + std::to_string(r.dim);
  s += ",\"x\":" + jnum(r.x);
  s += ",\"tolerance\":" + jnum(r.tolerance);
  s += ",\"gap\":" + jnum(r.gap);
  s += ",\"gap_via_relent\":" + jnum(r.gap_via_relent);
  s += ",\"lower\":{";
  s += "\"kim\":" + (r.kim ? jnum(*r.kim) : std::string("null"));
  s += ",\"pinsker\":" + jnum(r.pinsker);
  s += ",\"carlen_lieb\":" + jnum(r.carlen_lieb);
  s += ",\"block_pinsker\":" + jnum(r.block_pinsker);
  s += "},\"upper\":{";
  s += "\"classic\":" + jnum(r.classic);
  s += ",\"rfz_bures\":" + jnum(r.rfz_bures);
  s += ",\"rfz_trace\":" + jnum(r.rfz_trace);
  s += ",\"audenaert\":" + jnum(r.audenaert);
  s += "},\"routes\":{";
  s += "\"block_identity\":" + jnum(r.block_identity);
  s += ",\"carlen_lieb_route\":" + jnum(r.carlen_lieb_route);
  s += ",\"block_pinsker_closed\":" + jnum(r.block_pinsker_closed);
  s += "},\"chain\":[";
  for (std::size_t i = 0; i < r.chain.size(); ++i) {
    if (i) s += ",";
    s += "{\"name\":" + jstr(r.chain[i].name) + ",\"slack\":" + jnum(r.chain[i].slack) +
         ",\"ok\":" + jbool(r.chain[i].ok) + "}";
  }
  s += "],\"route_checks\":[";
  for (std::size_t i = 0; i < r.routes.size(); ++i) {
    if (i) s += ",";
    s += "{\"name\":" + jstr(r.routes[i].name) + ",\"deviation\":" + jnum(r.routes[i].deviation) +
         ",\"ok\":" + jbool(r.routes[i].ok) + "}";
  }
  s += "],\"winner\":" + jstr(r.winner);
  s += ",\"best_lower\":" + jstr(r.best_lower);
  s += ",\"all_ok\":" + jbool(r.all_ok());
  s += ",\"max_abs_slack\":" + jnum(r.max_abs_slack());
  s += "}";
  return s;
}

std::string report_table(const BoundReport& r) {
  std::ostringstream os;
  os << "mixture problem: dim=" << r.dim << "  x=" << format_g17(r.x) << "\n";
  os << "  gap              " << format_g17(r.gap) << "\n";
  os << "  gap via relent   " << format_g17(r.gap_via_relent) << "\n";
  os << "lower bounds\n";
  os << "  kim (lowbd0)           "
     << (r.kim ? format_g17(*r.kim) : std::string("not evaluated at x ~ 1/2")) << "\n";
  os << "  pinsker (lowbd1)       " << format_g17(r.pinsker) << "\n";
  os << "  carlen_lieb (lowbd2)   " << format_g17(r.carlen_lieb) << "\n";
  os << "  block_pinsker          " << format_g17(r.block_pinsker) << "\n";
  os << "upper bounds\n";
  os << "  classic (upbd)         " << format_g17(r.classic) << "\n";
  os << "  rfz_bures              " << format_g17(r.rfz_bures) << "\n";
  os << "  rfz_trace              " << format_g17(r.rfz_trace) << "\n";
  os << "  audenaert              " << format_g17(r.audenaert) << "\n";
  os << "routes\n";
  os << "  block identity         " << format_g17(r.block_identity) << "\n";
  os << "  carlen_lieb via blocks " << format_g17(r.carlen_lieb_route) << "\n";
  os << "  block_pinsker closed   " << format_g17(r.block_pinsker_closed) << "\n";
  os << "chain\n";
  for (const ChainCheck& c : r.chain)
    os << "  " << (c.ok ? "ok  " : "FAIL") << "  " << c.name << "  slack="
       << format_g17(c.slack) << "\n";
  for (const RouteCheck& c : r.routes)
    os << "  " << (c.ok ? "ok  " : "FAIL") << "  " << c.name << "  deviation="
       << format_g17(c.deviation) << "\n";
  os << "winner (lowbd1 vs lowbd2): " << r.winner << "\n";
  os << "best lower bound: " << r.best_lower << "\n";
  os << (r.all_ok() ? "ALL OK" : "VIOLATIONS PRESENT") << "\n";
  return os.str();
}

}  // namespace

std::string csv_header() {
  return "id,dim,x,gap,lowbd0,lowbd1,lowbd2,block_pinsker,upbd,rfz_bures,rfz_trace,"
         "audenaert,winner,max_abs_slack\n";
}

std::string csv_row(const std::string& id, const BoundReport& r) {
  std::string s = id;
  s += "," + std::to_string(r.dim);
  s += "," + format_g17(r.x);
  s += "," + format_g17(r.gap);
  s += "," + (r.kim ? format_g17(*r.kim) : std::string("na"));
  s += "," + format_g17(r.pinsker);
  s += "," + format_g17(r.carlen_lieb);
  s += "," + format_g17(r.block_pinsker);
  s += "," + format_g17(r.classic);
  s += "," + format_g17(r.rfz_bures);
  s += "," + format_g17(r.rfz_trace);
  s += "," + format_g17(r.audenaert);
  s += "," + r.winner;
  s += "," + format_g17(r.max_abs_slack());
  s += "\n";
  return s;
}

std::string render_report(const BoundReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: return report_table(report);
    case OutputFormat::json: return report_json(report) + "\n";
    case OutputFormat::csv: return csv_header() + csv_row("eval", report);
  }
  return {};
}

namespace {

std::string appendix_row_json(const AppendixRow& row) {
  std::string s = "{";
  s += "\"id\":" + jstr(std::string(1, row.id));
  s += ",\"x\":" + jnum(row.x);
  s += ",\"w1\":[" + jnum(row.w1[0]) + "," + jnum(row.w1[1]) + "," + jnum(row.w1[2]) + "]";
  s += ",\"w2\":[" + jnum(row.w2[0]) + "," + jnum(row.w2[1]) + "," + jnum(row.w2[2]) + "]";
  s += ",\"clamped1\":" + jbool(row.clamped1);
  s += ",\"clamped2\":" + jbool(row.clamped2);
  s += ",\"expected\":" + jstr(row.expected);
  s += ",\"margin\":" + jnum(row.margin);
  s += ",\"outcome_ok\":" + jbool(row.outcome_ok);
  s += ",\"report\":" + report_json(row.report);
  s += "}";
  return s;
}

}  // namespace

std::string render_appendix(const std::vector<AppendixRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    std::string s = "{\"examples\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) s += ",";
      s += appendix_row_json(rows[i]);
    }
    bool all = true;
    for (const AppendixRow& r : rows) all = all && r.outcome_ok;
    s += "],\"all_ok\":" + std::string(jbool(all)) + "}\n";
    return s;
  }
  if (format == OutputFormat::csv) {
    std::string s = csv_header();
    for (const AppendixRow& r : rows) s += csv_row(std::string(1, r.id), r.report);
    return s;
  }
  std::ostringstream os;
  for (const AppendixRow& r : rows) {
    os << "example (" << r.id << ")  x=" << format_g17(r.x) << "\n";
    os << "  w1 = (" << format_g17(r.w1[0]) << ", " << format_g17(r.w1[1]) << ", "
       << format_g17(r.w1[2]) << ")" << (r.clamped1 ? "  [projected onto unit sphere]" : "")
       << "\n";
    os << "  w2 = (" << format_g17(r.w2[0]) << ", " << format_g17(r.w2[1]) << ", "
       << format_g17(r.w2[2]) << ")" << (r.clamped2 ? "  [projected onto unit sphere]" : "")
       << "\n";
    os << "  gap=" << format_g17(r.report.gap)
       << "  lowbd0=" << (r.report.kim ? format_g17(*r.report.kim) : std::string("na"))
       << "  lowbd1=" << format_g17(r.report.pinsker)
       << "  lowbd2=" << format_g17(r.report.carlen_lieb) << "\n";
    os << "  expected " << r.expected << ": " << (r.outcome_ok ? "ok" : "FAIL")
       << "  margin=" << format_g17(r.margin) << "\n";
  }
  bool all = true;
  for (const AppendixRow& r : rows) all = all && r.outcome_ok;
  os << (all ? "ALL OK" : "OUTCOME MISMATCH") << "\n";
  return os.str();
}

namespace {

std::string violation_json(const ViolationRecord& v) {
  std::string s = "{";
  s += "\"inequality\":" + jstr(v.inequality);
  s += ",\"trial_index\":" + std::to_string(v.trial_index);
  s += ",\"trial_seed\":\"" + std::to_string(v.trial_seed) + "\"";
  s += ",\"dim\":" + std::to_string(v.dim);
  s += ",\"x\":" + jnum(v.x);
  s += ",\"state1\":" + jstr(v.state1);
  s += ",\"state2\":" + jstr(v.state2);
  s += ",\"slack\":" + jnum(v.slack);
  s += "}";
  return s;
}

}  // namespace

std::string render_campaign(const CampaignResult& result, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string s = csv_header();
    for (const TrialRow& row : result.rows)
      s += csv_row(std::to_string(row.index), row.report);
    return s;
  }
  if (format == OutputFormat::json) {
    std::string s = "{\"config\":{";
    s += "\"dims\":[";
    for (std::size_t i = 0; i < result.config.dims.size(); ++i)
      s += (i ? "," : "") + std::to_string(result.config.dims[i]);
    s += "],\"ranks\":[";
    for (std::size_t i = 0; i < result.config.ranks.size(); ++i)
      s += (i ? "," : "") + std::to_string(result.config.ranks[i]);
    s += "],\"trials_per_dim\":" + std::to_string(result.config.trials_per_dim);
    s += ",\"master_seed\":\"" + std::to_string(result.config.master_seed) + "\"";
    s += ",\"tolerance\":" + jnum(result.config.tolerance);
    s += ",\"x_delta\":" + jnum(result.config.x_delta);
    s += "},\"tallies\":[";
    for (std::size_t i = 0; i < result.tallies.size(); ++i) {
      const DimTally& t = result.tallies[i];
      if (i) s += ",";
      s += "{\"dim\":" + std::to_string(t.dim);
      s += ",\"rank\":" + std::to_string(t.rank);
      s += ",\"trials\":" + std::to_string(t.trials);
      s += ",\"chain_pass\":" + std::to_string(t.chain_pass);
      s += ",\"kim_indeterminate\":" + std::to_string(t.kim_indeterminate);
      s += ",\"winner\":{\"lowbd1\":" + std::to_string(t.winner_lowbd1) +
           ",\"lowbd2\":" + std::to_string(t.winner_lowbd2) +
           ",\"tie\":" + std::to_string(t.winner_tie) + "}";
      s += ",\"best_lower\":{\"lowbd0\":" + std::to_string(t.best_lowbd0) +
           ",\"lowbd1\":" + std::to_string(t.best_lowbd1) +
           ",\"lowbd2\":" + std::to_string(t.best_lowbd2) +
           ",\"tie\":" + std::to_string(t.best_tie) + "}";
      s += "}";
    }
    s += "],\"violations\":[";
    for (std::size_t i = 0; i < result.violations.size(); ++i) {
      if (i) s += ",";
      s += violation_json(result.violations[i]);
    }
    s += "],\"ok\":" + std::string(jbool(result.ok())) + "}\n";
    return s;
  }

  std::ostringstream os;
  os << "fuzz campaign: seed=" << result.config.master_seed
     << "  trials/dim=" << result.config.trials_per_dim
     << "  tolerance=" << format_g17(result.config.tolerance) << "\n";
  os << "dim  rank  trials  pass  kim_na  win_lowbd1  win_lowbd2  win_tie  "
        "best0  best1  best2  best_tie\n";
  for (const DimTally& t : result.tallies) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-4d %-5d %-7d %-5d %-7d %-11d %-11d %-8d %-6d %-6d %-6d %d\n",
                  t.dim, t.rank, t.trials, t.chain_pass, t.kim_indeterminate, t.winner_lowbd1,
                  t.winner_lowbd2, t.winner_tie, t.best_lowbd0, t.best_lowbd1, t.best_lowbd2,
                  t.best_tie);
    os << line;
  }
  os << "violations: " << result.violations.size() << "\n";
  for (const ViolationRecord& v : result.violations)
    os << "  " << v.inequality << "  trial=" << v.trial_index << " seed=" << v.trial_seed
       << " dim=" << v.dim << " x=" << format_g17(v.x) << " slack=" << format_g17(v.slack)
       << "\n    state1=" << v.state1 << "\n    state2=" << v.state2 << "\n";
  os << (result.ok() ? "ALL OK" : "VIOLATIONS PRESENT") << "\n";
  return os.str();
}

std::string render_critical(const CriticalParams& cp, OutputFormat format) {
  if (format == OutputFormat::json) {
    std::string s = "{";
    s += "\"tolerance\":" + jnum(cp.tolerance);
    s += ",\"a_max\":" + jnum(cp.a_max);
    s += ",\"pinsker_reference\":" + jnum(cp.pinsker_reference);
    s += ",\"audenaert_reference\":" + jnum(cp.audenaert_reference);
    s += ",\"b\":{\"status\":" + jstr(to_string(cp.b_status));
    s += ",\"lo\":" + jnum(cp.b_lo) + ",\"hi\":" + jnum(cp.b_hi);
    s += ",\"b_c\":" +
         (cp.b_status == CriticalParams::BStatus::none_in_range ? std::string("null")
                                                                : jnum(cp.b_c()));
    s += "},\"a\":{\"status\":" + jstr(to_string(cp.a_status));
    s += ",\"lo\":" + jnum(cp.a_lo) + ",\"hi\":" + jnum(cp.a_hi);
    s += ",\"a_star\":" +
         (cp.a_status == CriticalParams::AStatus::none ? std::string("null") : jnum(cp.a_star()));
    s += "},\"grid\":[";
    for (std::size_t i = 0; i < cp.grid.size(); ++i) {
      const CriticalGridPoint& g = cp.grid[i];
      if (i) s += ",";
      s += "{\"family\":" + jstr(g.family) + ",\"param\":" + jnum(g.param) +
           ",\"mixture\":" + jnum(g.mixture) + ",\"reference\":" + jnum(g.reference) +
           ",\"satisfied\":" + jbool(g.satisfied) + "}";
    }
    s += "]}\n";
    return s;
  }
  if (format == OutputFormat::csv) {
    std::string s = "family,param,mixture,reference,satisfied\n";
    for (const CriticalGridPoint& g : cp.grid)
      s += g.family + "," + format_g17(g.param) + "," + format_g17(g.mixture) + "," +
           format_g17(g.reference) + "," + (g.satisfied ? "1" : "0") + "\n";
    return s;
  }

  std::ostringstream os;
  os << "critical parameters (bisection tolerance " << format_g17(cp.tolerance) << ")\n";
  os << "  reference pinsker lower   = " << format_g17(cp.pinsker_reference) << "\n";
  os << "  reference audenaert upper = " << format_g17(cp.audenaert_reference) << "\n";
  os << "  b: " << to_string(cp.b_status);
  if (cp.b_status != CriticalParams::BStatus::none_in_range)
    os << "  b_c=" << format_g17(cp.b_c());
  os << "  bracket [" << format_g17(cp.b_lo) << ", " << format_g17(cp.b_hi) << "]\n";
  os << "  a: " << to_string(cp.a_status);
  if (cp.a_status != CriticalParams::AStatus::none)
    os << "  a_star=" << format_g17(cp.a_star());
  os << "  bracket [" << format_g17(cp.a_lo) << ", " << format_g17(cp.a_hi) << "]"
     << "  (a_max=" << format_g17(cp.a_max) << ")\n";
  os << "grid\n";
  for (const CriticalGridPoint& g : cp.grid) {
    char line[160];
    std::snprintf(line, sizeof(line), "  %-10s param=%-12.6g mixture=%-22.17g ref=%-22.17g %s\n",
                  g.family.c_str(), g.param, g.mixture, g.reference,
                  g.satisfied ? "satisfied" : "not satisfied");
    os << line;
  }
  return os.str();
}

}  // namespace qconcav
