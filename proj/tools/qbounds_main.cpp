#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qbounds/bounds.hpp"
#include "qbounds/certificates.hpp"
#include "qbounds/krawtchouk.hpp"
#include "qbounds/mds.hpp"
#include "qbounds/render.hpp"
#include "qbounds/verify.hpp"

namespace {

using namespace qbounds;

int parse_int_strict(const std::string& token) {
  int v{};
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::domain_error("bad integer '" + token + "'");
  }
  return v;
}

// "2,5:8" -> {2,5,6,7,8}, sorted unique. Throws std::domain_error on junk.
std::vector<int> parse_int_spec(const std::string& spec) {
  std::vector<int> out;
  std::string item;
  std::istringstream ss(spec);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::domain_error("empty list item in '" + spec + "'");
    const size_t colon = item.find(':');
    if (colon == std::string::npos) {
      out.push_back(parse_int_strict(item));
    } else {
      const int lo = parse_int_strict(item.substr(0, colon));
      const int hi = parse_int_strict(item.substr(colon + 1));
      if (hi < lo) throw std::domain_error("descending range '" + item + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  if (out.empty()) throw std::domain_error("empty list '" + spec + "'");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output path '" << out_path << "'\n";
    return 2;
  }
  f << text;
  f.flush();
  if (!f.good()) {
    std::cerr << "error: write failed for '" << out_path << "'\n";
    return 2;
  }
  return 0;
}

std::string render_rows(OutputFormat format,
                        const std::vector<std::string>& header,
                        const std::vector<Row>& rows,
                        const std::function<std::string()>& human) {
  switch (format) {
    case OutputFormat::kCsv: return render_csv(header, rows);
    case OutputFormat::kJson: return render_json(rows);
    case OutputFormat::kHuman: return human();
  }
  return {};
}

struct CommonOpts {
  OutputFormat format = OutputFormat::kHuman;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  static const std::map<std::string, OutputFormat> kFormats{
      {"human", OutputFormat::kHuman},
      {"json", OutputFormat::kJson},
      {"csv", OutputFormat::kCsv}};
  cmd->add_option("--format", opts->format, "output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  cmd->add_option("--out", opts->out_path, "write output to this path");
}

int cmd_bound(int n, int k, int d, int q, const CommonOpts& common) {
  const BoundReport report = check_code(CodeParams{n, k, d, q});
  const std::string text =
      render_rows(common.format, bound_table_header(), {bound_report_row(report)},
                  [&] { return human_bound(report); });
  const int io = write_output(text, common.out_path);
  if (io != 0) return io;
  const bool violated = report.singleton == BoundStatus::kViolated ||
                        report.hamming == BoundStatus::kViolated;
  return violated ? 1 : 0;
}

int cmd_cert(int n, int q, int e, bool dump_coeffs, const CommonOpts& common) {
  const Certificate cert = hamming_certificate(n, q, e);
  const ConditionReport conditions = verify_conditions(cert);
  std::optional<LpBoundResult> lp;
  std::vector<RatioEntry> ratios;
  if (conditions.ok()) {
    lp = lp_bound(cert);
    ratios = ratio_table(cert);
  }
  const std::string text = render_rows(
      common.format, cert_header(),
      cert_rows(cert, e, conditions, lp, ratios, dump_coeffs),
      [&] { return human_cert(cert, conditions, lp, ratios, dump_coeffs); });
  const int io = write_output(text, common.out_path);
  if (io != 0) return io;
  return conditions.ok() ? 0 : 1;
}

int cmd_threshold(int q, int e, int n_max, int workers,
                  const CommonOpts& common) {
  const DominanceReport report = dominance_threshold(q, e, n_max, workers);
  const std::string text =
      render_rows(common.format, threshold_header(), threshold_rows(report),
                  [&] { return human_threshold(report); });
  return write_output(text, common.out_path);
}

int cmd_mds(int q, int e, long n_max, const CommonOpts& common) {
  const MdsLengthReport report = mds_report(q, e, n_max);
  const std::string text =
      render_rows(common.format, mds_header(), {mds_row(report)},
                  [&] { return human_mds(report); });
  return write_output(text, common.out_path);
}

int cmd_table(const std::string& q_spec, const std::string& n_spec,
              const std::string& d_spec, const std::string& e_spec,
              const std::string& k_spec, int workers,
              const CommonOpts& common) {
  if (!d_spec.empty() && !e_spec.empty()) {
    throw std::domain_error("table: give --d or --e, not both");
  }
  if (d_spec.empty() && e_spec.empty()) {
    throw std::domain_error("table: one of --d or --e is required");
  }
  const std::vector<int> qs = parse_int_spec(q_spec);
  const std::vector<int> ns = parse_int_spec(n_spec);
  std::vector<int> ds;
  if (!d_spec.empty()) {
    ds = parse_int_spec(d_spec);
  } else {
    for (int e : parse_int_spec(e_spec)) {
      if (e < 1) throw std::domain_error("table: e must be >= 1");
      ds.push_back(2 * e + 1);
    }
  }
  std::optional<std::vector<int>> ks;
  if (!k_spec.empty()) ks = parse_int_spec(k_spec);

  // Row order is (q, n, d, k) ascending by construction.
  std::vector<CodeParams> params;
  for (int q : qs) {
    if (q < 2) throw std::domain_error("table: q must be >= 2");
    for (int n : ns) {
      if (n < 1) throw std::domain_error("table: n must be >= 1");
      for (int d : ds) {
        if (d < 1) throw std::domain_error("table: d must be >= 1");
        if (d > n) continue;
        if (ks) {
          for (int k : *ks) {
            if (k >= 0 && k <= n) params.push_back(CodeParams{n, k, d, q});
          }
        } else {
          for (int k = 0; k <= n; ++k) params.push_back(CodeParams{n, k, d, q});
        }
      }
    }
  }

  std::vector<BoundReport> reports(params.size());
  const int pool_size = std::clamp(
      workers, 1, static_cast<int>(std::max<std::size_t>(params.size(), 1)));
  auto work = [&](int w) {
    for (size_t i = w; i < params.size(); i += pool_size) {
      reports[i] = check_code(params[i]);
    }
  };
  if (pool_size == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < pool_size; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::vector<Row> rows;
  rows.reserve(reports.size());
  for (const BoundReport& r : reports) rows.push_back(bound_report_row(r));
  const std::string text =
      render_rows(common.format, bound_table_header(), rows,
                  [&] { return human_table(reports); });
  return write_output(text, common.out_path);
}

int cmd_verify_paper(int workers, const CommonOpts& common) {
  VerifyOptions opts;
  opts.workers = workers;
  const FindingsLedger ledger = run_paper_verification(opts);
  const std::string text =
      render_rows(common.format, verify_header(), verify_rows(ledger),
                  [&] { return human_verify(ledger); });
  const int io = write_output(text, common.out_path);
  if (io != 0) return io;
  return ledger.has_bug_candidates() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact upper bounds for quantum stabilizer code parameters"};
  app.require_subcommand(1);

  int exit_code = 0;
  std::function<int()> run;

  // bound
  {
    auto* cmd = app.add_subcommand("bound", "check one ((n,k,d))_q code");
    auto opts = std::make_shared<CommonOpts>();
    auto n = std::make_shared<int>(0), k = std::make_shared<int>(0),
         d = std::make_shared<int>(0), q = std::make_shared<int>(0);
    cmd->add_option("--n", *n, "length")->required();
    cmd->add_option("--k", *k, "dimension exponent, K = q^k")->required();
    cmd->add_option("--d", *d, "minimum distance")->required();
    cmd->add_option("--q", *q, "field size")->required();
    add_common(cmd, opts.get());
    cmd->callback([&run, n, k, d, q, opts] {
      run = [=] { return cmd_bound(*n, *k, *d, *q, *opts); };
    });
  }

  // cert
  {
    auto* cmd = app.add_subcommand(
        "cert", "build and inspect the sphere-packing certificate");
    auto opts = std::make_shared<CommonOpts>();
    auto n = std::make_shared<int>(0), q = std::make_shared<int>(0),
         e = std::make_shared<int>(0);
    auto dump = std::make_shared<bool>(false);
    cmd->add_option("--n", *n, "length")->required();
    cmd->add_option("--q", *q, "field size")->required();
    cmd->add_option("--e", *e, "error radius")->required();
    cmd->add_flag("--dump-coeffs", *dump, "also print all coefficients");
    add_common(cmd, opts.get());
    cmd->callback([&run, n, q, e, dump, opts] {
      run = [=] { return cmd_cert(*n, *q, *e, *dump, *opts); };
    });
  }

  // threshold
  {
    auto* cmd = app.add_subcommand(
        "threshold", "scan where f(0)/f_0 dominates all certificate ratios");
    auto opts = std::make_shared<CommonOpts>();
    auto q = std::make_shared<int>(0), e = std::make_shared<int>(0),
         n_max = std::make_shared<int>(512), workers = std::make_shared<int>(1);
    cmd->add_option("--q", *q, "field size")->required();
    cmd->add_option("--e", *e, "error radius")->required();
    cmd->add_option("--n-max", *n_max, "scan horizon");
    cmd->add_option("--workers", *workers, "worker threads");
    add_common(cmd, opts.get());
    cmd->callback([&run, q, e, n_max, workers, opts] {
      run = [=] { return cmd_threshold(*q, *e, *n_max, *workers, *opts); };
    });
  }

  // mds
  {
    auto* cmd = app.add_subcommand(
        "mds", "maximal admissible length before exclusion");
    auto opts = std::make_shared<CommonOpts>();
    auto q = std::make_shared<int>(0), e = std::make_shared<int>(0);
    auto n_max = std::make_shared<long>(4096);
    cmd->add_option("--q", *q, "field size")->required();
    cmd->add_option("--e", *e, "error radius")->required();
    cmd->add_option("--n-max", *n_max, "scan horizon");
    add_common(cmd, opts.get());
    cmd->callback([&run, q, e, n_max, opts] {
      run = [=] { return cmd_mds(*q, *e, *n_max, *opts); };
    });
  }

  // table
  {
    auto* cmd = app.add_subcommand(
        "table", "feasibility table over a parameter sweep");
    auto opts = std::make_shared<CommonOpts>();
    auto q = std::make_shared<std::string>(), n = std::make_shared<std::string>(),
         d = std::make_shared<std::string>(), e = std::make_shared<std::string>(),
         k = std::make_shared<std::string>();
    auto workers = std::make_shared<int>(1);
    cmd->add_option("--q", *q, "field sizes, e.g. 2,3")->required();
    cmd->add_option("--n", *n, "lengths, e.g. 4:12")->required();
    cmd->add_option("--d", *d, "distances, e.g. 3,5");
    cmd->add_option("--e", *e, "error radii (d = 2e+1)");
    cmd->add_option("--k", *k, "dimension exponents (default: all 0..n)");
    cmd->add_option("--workers", *workers, "worker threads");
    add_common(cmd, opts.get());
    cmd->callback([&run, q, n, d, e, k, workers, opts] {
      run = [=] { return cmd_table(*q, *n, *d, *e, *k, *workers, *opts); };
    });
  }

  // verify-paper
  {
    auto* cmd = app.add_subcommand(
        "verify-paper",
        "re-derive the published closed forms, thresholds and length bounds");
    auto opts = std::make_shared<CommonOpts>();
    auto workers = std::make_shared<int>(1);
    cmd->add_option("--workers", *workers, "worker threads");
    add_common(cmd, opts.get());
    cmd->callback([&run, workers, opts] {
      run = [=] { return cmd_verify_paper(*workers, *opts); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    exit_code = run();
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
