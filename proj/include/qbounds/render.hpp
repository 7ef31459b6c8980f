#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbounds/bounds.hpp"
#include "qbounds/certificates.hpp"
#include "qbounds/mds.hpp"
#include "qbounds/verify.hpp"

namespace qbounds {

enum class OutputFormat { kHuman, kJson, kCsv };

/// One typed cell of machine output. CSV renders null as "na"; JSON renders
/// it as null. All numeric content is exact decimal/fraction strings.
struct Cell {
  enum class Kind { kInt, kText, kBool, kNull };
  Kind kind = Kind::kNull;
  long num = 0;
  std::string text;
  bool flag = false;

  static Cell integer(long v);
  static Cell of_text(std::string v);
  static Cell boolean(bool v);
  static Cell null();
};

using Row = std::vector<std::pair<std::string, Cell>>;

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<Row>& rows);
std::string render_json(const std::vector<Row>& rows);

// Row schemas. `table` and `bound` share the contracted column set.
std::vector<std::string> bound_table_header();
Row bound_report_row(const BoundReport& report);

std::vector<std::string> cert_header();
std::vector<Row> cert_rows(const Certificate& cert, int e,
                           const ConditionReport& conditions,
                           const std::optional<LpBoundResult>& lp,
                           const std::vector<RatioEntry>& ratios,
                           bool dump_coeffs);

std::vector<std::string> threshold_header();
std::vector<Row> threshold_rows(const DominanceReport& report);

std::vector<std::string> mds_header();
Row mds_row(const MdsLengthReport& report);

std::vector<std::string> verify_header();
std::vector<Row> verify_rows(const FindingsLedger& ledger);

// Human-readable renderings.
std::string human_bound(const BoundReport& report);
std::string human_table(const std::vector<BoundReport>& reports);
std::string human_cert(const Certificate& cert,
                       const ConditionReport& conditions,
                       const std::optional<LpBoundResult>& lp,
                       const std::vector<RatioEntry>& ratios,
                       bool dump_coeffs);
std::string human_threshold(const DominanceReport& report);
std::string human_mds(const MdsLengthReport& report);
std::string human_verify(const FindingsLedger& ledger);

}  // namespace qbounds
