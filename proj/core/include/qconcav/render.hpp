#pragma once

#include <string>
#include <vector>

#include "qconcav/bounds.hpp"
#include "qconcav/campaign.hpp"
#include "qconcav/critical.hpp"

namespace qconcav {

enum class OutputFormat { table, json, csv };

/// Parses "table", "json" or "csv"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

/// Shortest %.17g rendering; every payload number goes through this so
/// identical runs emit byte-identical text.
std::string format_g17(double v);

/// Fixed CSV schema shared by eval, appendix and fuzz output:
/// id,dim,x,gap,lowbd0,lowbd1,lowbd2,block_pinsker,upbd,rfz_bures,rfz_trace,
/// audenaert,winner,max_abs_slack. An unevaluated Kim bound renders as "na".
std::string csv_header();
std::string csv_row(const std::string& id, const BoundReport& report);

std::string render_report(const BoundReport& report, OutputFormat format);
std::string render_appendix(const std::vector<AppendixRow>& rows, OutputFormat format);
std::string render_campaign(const CampaignResult& result, OutputFormat format);
std::string render_critical(const CriticalParams& params, OutputFormat format);

}  // namespace qconcav
