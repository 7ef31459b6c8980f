#include "qbounds/render.hpp"

#include <json.hpp>

#include <sstream>

namespace qbounds {

Cell Cell::integer(long v) {
  Cell c;
  c.kind = Kind::kInt;
  c.num = v;
  return c;
}

Cell Cell::of_text(std::string v) {
  Cell c;
  c.kind = Kind::kText;
  c.text = std::move(v);
  return c;
}

Cell Cell::boolean(bool v) {
  Cell c;
  c.kind = Kind::kBool;
  c.flag = v;
  return c;
}

Cell Cell::null() { return Cell{}; }

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_cell(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::kInt: return std::to_string(c.num);
    case Cell::Kind::kText: return csv_escape(c.text);
    case Cell::Kind::kBool: return c.flag ? "true" : "false";
    case Cell::Kind::kNull: return "na";
  }
  return "";
}

}  // namespace

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<Row>& rows) {
  std::string out;
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const Row& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row[i].second);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const std::vector<Row>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Row& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [key, cell] : row) {
      switch (cell.kind) {
        case Cell::Kind::kInt: obj[key] = cell.num; break;
        case Cell::Kind::kText: obj[key] = cell.text; break;
        case Cell::Kind::kBool: obj[key] = cell.flag; break;
        case Cell::Kind::kNull: obj[key] = nullptr; break;
      }
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::vector<std::string> bound_table_header() {
  return {"q", "n", "k", "d", "singleton_max_k", "hamming_bound",
          "singleton_ok", "hamming_ok", "mds", "perfect",
          "hamming_applicability"};
}

namespace {

Cell status_cell(BoundStatus s) {
  if (s == BoundStatus::kNotApplicable) return Cell::null();
  return Cell::boolean(s == BoundStatus::kSatisfied);
}

}  // namespace

Row bound_report_row(const BoundReport& r) {
  return Row{
      {"q", Cell::integer(r.params.q)},
      {"n", Cell::integer(r.params.n)},
      {"k", Cell::integer(r.params.k)},
      {"d", Cell::integer(r.params.d)},
      {"singleton_max_k", Cell::of_text(r.singleton_max_k.str())},
      {"hamming_bound", Cell::of_text(r.hamming_max_k.str())},
      {"singleton_ok", status_cell(r.singleton)},
      {"hamming_ok", status_cell(r.hamming)},
      {"mds", Cell::boolean(r.mds)},
      {"perfect", Cell::boolean(r.perfect)},
      {"hamming_applicability", Cell::of_text(to_string(r.applicability))},
  };
}

std::vector<std::string> cert_header() {
  return {"n", "q", "e", "kind", "index", "value"};
}

std::vector<Row> cert_rows(const Certificate& cert, int e,
                           const ConditionReport& conditions,
                           const std::optional<LpBoundResult>& lp,
                           const std::vector<RatioEntry>& ratios,
                           bool dump_coeffs) {
  const int n = cert.ctx->length();
  const int q = cert.ctx->field_size();
  const auto base = [&](const char* kind, Cell index, Cell value) {
    return Row{{"n", Cell::integer(n)},     {"q", Cell::integer(q)},
               {"e", Cell::integer(e)},     {"kind", Cell::of_text(kind)},
               {"index", std::move(index)}, {"value", std::move(value)}};
  };
  std::vector<Row> rows;
  rows.push_back(base("feasible", Cell::null(),
                      Cell::boolean(conditions.ok())));
  for (const ConditionViolation& v : conditions.violations) {
    rows.push_back(base(v.condition == 1 ? "violation-i" : "violation-ii",
                        Cell::integer(v.x), Cell::of_text(v.value.str())));
  }
  if (lp) {
    rows.push_back(base("bound", Cell::integer(lp->argmax_x),
                        Cell::of_text(lp->bound.str())));
  }
  for (const RatioEntry& r : ratios) {
    rows.push_back(
        base("ratio", Cell::integer(r.x), Cell::of_text(r.ratio.str())));
  }
  if (dump_coeffs) {
    for (int j = 0; j <= n; ++j) {
      rows.push_back(base("coeff", Cell::integer(j),
                          Cell::of_text(cert.coeffs[j].str())));
    }
  }
  return rows;
}

std::vector<std::string> threshold_header() {
  return {"q", "e", "x", "first_stable_n", "stable_threshold"};
}

std::vector<Row> threshold_rows(const DominanceReport& report) {
  std::vector<Row> rows;
  const Cell stable = report.stable_threshold
                          ? Cell::integer(*report.stable_threshold)
                          : Cell::of_text("none");
  for (const PerXThreshold& t : report.per_x) {
    rows.push_back(Row{
        {"q", Cell::integer(report.q)},
        {"e", Cell::integer(report.e)},
        {"x", Cell::integer(t.x)},
        {"first_stable_n", t.first_stable ? Cell::integer(*t.first_stable)
                                          : Cell::of_text("none")},
        {"stable_threshold", stable},
    });
  }
  return rows;
}

std::vector<std::string> mds_header() {
  return {"q", "e", "formula_bound", "scan_bound", "agree", "reference_cap"};
}

Row mds_row(const MdsLengthReport& r) {
  return Row{
      {"q", Cell::integer(r.q)},
      {"e", Cell::integer(r.e)},
      {"formula_bound",
       r.formula_bound ? Cell::integer(*r.formula_bound) : Cell::null()},
      {"scan_bound",
       r.scan_bound ? Cell::integer(*r.scan_bound) : Cell::of_text("none")},
      {"agree", Cell::boolean(r.agree)},
      {"reference_cap", Cell::integer(r.reference_singleton_cap)},
  };
}

std::vector<std::string> verify_header() {
  return {"check_id", "provenance", "expected", "actual", "verdict"};
}

std::vector<Row> verify_rows(const FindingsLedger& ledger) {
  std::vector<Row> rows;
  rows.reserve(ledger.findings.size());
  for (const Finding& f : ledger.findings) {
    rows.push_back(Row{
        {"check_id", Cell::of_text(f.check_id)},
        {"provenance", Cell::of_text(to_string(f.provenance))},
        {"expected", Cell::of_text(f.expected)},
        {"actual", Cell::of_text(f.actual)},
        {"verdict", Cell::of_text(to_string(f.verdict))},
    });
  }
  return rows;
}

std::string human_bound(const BoundReport& r) {
  std::ostringstream os;
  os << "code ((" << r.params.n << "," << r.params.k << "," << r.params.d
     << "))_" << r.params.q << "  K = " << r.params.q << "^" << r.params.k
     << "\n";
  os << "  singleton max K: " << r.singleton_max_k.str() << " (k <= "
     << r.singleton_exponent << ")  status: " << to_string(r.singleton)
     << "  mds: " << (r.mds ? "true" : "false") << "\n";
  os << "  hamming max K:   " << r.hamming_max_k.str()
     << "  status: " << to_string(r.hamming)
     << "  perfect: " << (r.perfect ? "true" : "false") << "\n";
  os << "  hamming applicability: " << to_string(r.applicability) << "\n";
  if (r.singleton_exponent < 0) {
    os << "  note: singleton bound < 1, no K > 1 admissible\n";
  }
  return os.str();
}

std::string human_table(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  const auto header = bound_table_header();
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) os << "  ";
    os << header[i];
  }
  os << "\n";
  for (const BoundReport& r : reports) {
    const Row row = bound_report_row(r);
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << "  ";
      os << csv_cell(row[i].second);
    }
    os << "\n";
  }
  return os.str();
}

std::string human_cert(const Certificate& cert,
                       const ConditionReport& conditions,
                       const std::optional<LpBoundResult>& lp,
                       const std::vector<RatioEntry>& ratios,
                       bool dump_coeffs) {
  std::ostringstream os;
  const int n = cert.ctx->length();
  os << "certificate n=" << n << " q=" << cert.ctx->field_size() << " S={"
     << cert.distinguished.front() << ".." << cert.distinguished.back()
     << "}\n";
  os << "  condition i (coefficient positivity): "
     << (conditions.condition_i_ok ? "ok" : "violated") << "\n";
  os << "  condition ii (expansion <= 0 off S):  "
     << (conditions.condition_ii_ok ? "ok" : "violated") << "\n";
  for (const ConditionViolation& v : conditions.violations) {
    os << "    violation: condition " << (v.condition == 1 ? "i" : "ii")
       << " at x=" << v.x << ", value " << v.value.str() << "\n";
  }
  if (lp) {
    os << "  bound: K <= " << lp->bound.str() << " (argmax x=" << lp->argmax_x
       << ")\n";
  }
  if (!ratios.empty()) {
    os << "  ratios f(x)/f_x:\n";
    for (const RatioEntry& r : ratios) {
      os << "    x=" << r.x << ": " << r.ratio.str() << "\n";
    }
  }
  if (dump_coeffs) {
    os << "  coefficients:\n";
    for (int j = 0; j <= n; ++j) {
      os << "    f_" << j << " = " << cert.coeffs[j].str() << "\n";
    }
  }
  return os.str();
}

std::string human_threshold(const DominanceReport& report) {
  std::ostringstream os;
  os << "dominance scan q=" << report.q << " e=" << report.e << ", n in ["
     << report.n_lo << "," << report.n_hi << "]\n";
  os << "  non-dominant n:";
  bool any = false;
  for (int i = 0; i < static_cast<int>(report.dominant.size()); ++i) {
    if (!report.dominant[i]) {
      os << " " << report.n_lo + i;
      any = true;
    }
  }
  if (!any) os << " (none)";
  os << "\n  stable threshold n*: "
     << (report.stable_threshold ? std::to_string(*report.stable_threshold)
                                 : "not stabilized in scan range")
     << "\n  per-x first stable:";
  for (const PerXThreshold& t : report.per_x) {
    os << " x=" << t.x << ":"
       << (t.first_stable ? std::to_string(*t.first_stable) : "none");
  }
  os << "\n";
  return os.str();
}

std::string human_mds(const MdsLengthReport& r) {
  std::ostringstream os;
  os << "mds maximal length q=" << r.q << " e=" << r.e << "\n";
  os << "  formula bound: "
     << (r.formula_bound ? std::to_string(*r.formula_bound)
                         : std::string("n/a for this e"))
     << "\n";
  os << "  scan bound:    "
     << (r.scan_bound ? std::to_string(*r.scan_bound)
                      : std::string("none admissible"))
     << (r.scan_exhausted ? " (scan horizon reached)" : "") << "\n";
  os << "  agree: " << (r.agree ? "true" : "false") << "\n";
  os << "  singleton-side reference cap (prior work): "
     << r.reference_singleton_cap << "\n";
  return os.str();
}

std::string human_verify(const FindingsLedger& ledger) {
  std::ostringstream os;
  int match = 0, discrepancy = 0, bug = 0;
  for (const Finding& f : ledger.findings) {
    os << "[" << to_string(f.verdict) << "] " << f.check_id << "\n";
    os << "    expected (" << to_string(f.provenance) << "): " << f.expected
       << "\n";
    os << "    actual: " << f.actual << "\n";
    switch (f.verdict) {
      case Verdict::kMatch: ++match; break;
      case Verdict::kPaperDiscrepancy: ++discrepancy; break;
      case Verdict::kImplementationBugCandidate: ++bug; break;
    }
  }
  os << ledger.findings.size() << " checks: " << match << " match, "
     << discrepancy << " paper-discrepancy, " << bug
     << " implementation-bug-candidate\n";
  return os.str();
}

}  // namespace qbounds
