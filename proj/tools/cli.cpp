#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>

#include "qkoh/conjecture.hpp"
#include "qkoh/koh.hpp"
#include "qkoh/qbinomial.hpp"
#include "qkoh/serialize.hpp"

namespace qkoh::cli {

namespace {

constexpr const char* kCacheEnv = "QKOH_CACHE";

enum class Format { Text, Json, Csv };

struct RunConfig {
  Format format = Format::Text;
  unsigned workers = 1;
  std::string cache_path;
  std::vector<std::string> threshold_overrides;
  ThresholdTable thresholds;
};

ThresholdTable parse_thresholds(const std::vector<std::string>& overrides) {
  ThresholdTable table;
  for (const auto& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--threshold expects K=M, got '" + item + "'");
    std::size_t used_k = 0;
    std::size_t used_m = 0;
    const std::string ks = item.substr(0, eq);
    const std::string ms = item.substr(eq + 1);
    const auto k = std::stoll(ks, &used_k);
    const auto m = std::stoll(ms, &used_m);
    if (used_k != ks.size() || used_m != ms.size()) {
      throw std::invalid_argument("--threshold expects K=M, got '" + item + "'");
    }
    table.set(k, m);
  }
  return table;
}

void write_poly(std::ostream& out, const IntPoly& p, Format format) {
  switch (format) {
    case Format::Text:
      out << poly_to_text(p) << '\n';
      break;
    case Format::Json:
      out << poly_to_json(p).dump() << '\n';
      break;
    case Format::Csv:
      out << "degree,coefficient\n";
      for (std::size_t i = 0; i < p.size(); ++i) out << i << ',' << p[i].get_str() << '\n';
      break;
  }
}

void write_reports(std::ostream& out, const std::vector<CheckReport>& reports, Format format) {
  switch (format) {
    case Format::Text:
      for (const auto& r : reports) out << report_to_text(r) << '\n';
      break;
    case Format::Json:
      out << reports_to_json(reports).dump(1) << '\n';
      break;
    case Format::Csv:
      out << reports_to_csv(reports);
      break;
  }
}

std::size_t count_disagreements(const std::vector<CheckReport>& reports) {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.agrees_with_prediction ? 0 : 1;
  return n;
}

int cmd_koh(std::ostream& out, std::int64_t a, std::int64_t k, Format format) {
  const auto terms = koh_decompose(a, k);
  const IntPoly sum = koh_sum(terms);
  const IntPoly expected = qbinomial(a + k, k);
  const bool ok = sum == expected;
  if (format == Format::Json) {
    Json doc = {{"a", a},
                {"k", k},
                {"terms", koh_terms_to_json(terms)},
                {"sum", poly_to_json(sum)},
                {"expected", poly_to_json(expected)},
                {"identity", ok}};
    out << doc.dump(1) << '\n';
  } else if (format == Format::Csv) {
    out << "partition,exponent,factors,poly\n";
    for (const auto& t : terms) {
      std::string parts;
      for (auto p : t.lambda.parts()) parts += (parts.empty() ? "" : " ") + std::to_string(p);
      std::string factors;
      for (const auto& f : t.factors) {
        factors += (factors.empty() ? "" : " ") + std::to_string(f.top) + "/" + std::to_string(f.bottom);
      }
      std::string coeffs;
      for (const auto& c : t.poly.coeffs()) coeffs += (coeffs.empty() ? "" : " ") + c.get_str();
      out << parts << ',' << t.leading_exponent << ',' << factors << ',' << coeffs << '\n';
    }
  } else {
    for (const auto& t : terms) {
      out << "(";
      for (std::size_t i = 0; i < t.lambda.length(); ++i) out << (i ? "," : "") << t.lambda.parts()[i];
      out << ")  q^" << t.leading_exponent;
      for (const auto& f : t.factors) {
        if (f.bottom != 0) out << " * [" << f.top << " " << f.bottom << "]";
      }
      out << "  =  " << poly_to_text(t.poly) << '\n';
    }
    out << "sum = [" << (a + k) << " " << k << "]_q: " << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kOk : kDisagreement;
}

int cmd_check(std::ostream& out, const DiffSpec& spec, const RunConfig& cfg) {
  const auto report = check(spec, cfg.thresholds);
  if (cfg.format == Format::Json) {
    out << report_to_json(report).dump(1) << '\n';
  } else if (cfg.format == Format::Csv) {
    out << kCsvHeader << '\n' << report_to_csv_row(report) << '\n';
  } else {
    out << report_to_text(report) << '\n';
  }
  return report.agrees_with_prediction ? kOk : kDisagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian polynomials, KOH decompositions and symmetric differences f(k,m,b)", "qkoh"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--workers", cfg.workers, "Worker threads for scans")->check(CLI::PositiveNumber);
  app.add_option("--cache", cfg.cache_path, "On-disk q-binomial cache (default: $QKOH_CACHE)");
  app.add_option("--threshold", cfg.threshold_overrides, "Override the minimal m for k >= 5, as K=M");

  std::int64_t x = 0, y = 0, z = 0;
  auto* qb = app.add_subcommand("qbinom", "Print binom(m,k)_q");
  qb->add_option("m", x)->required();
  qb->add_option("k", y)->required();

  auto* koh = app.add_subcommand("koh", "KOH decomposition of binom(a+k,k)_q");
  koh->add_option("a", x)->required()->check(CLI::NonNegativeNumber);
  koh->add_option("k", y)->required()->check(CLI::PositiveNumber);

  auto* f = app.add_subcommand("f", "Print f(k,m,b)");
  auto* chk = app.add_subcommand("check", "Check f(k,m,b) against the predicted exceptions");
  for (auto* sub : {f, chk}) {
    sub->add_option("k", x)->required();
    sub->add_option("m", y)->required();
    sub->add_option("b", z)->required();
  }

  bool only_disagreements = false;
  auto* sc = app.add_subcommand("scan", "Check every admissible b for m in [m_lo, m_hi]");
  sc->add_option("k", x)->required();
  sc->add_option("m_lo", y)->required();
  sc->add_option("m_hi", z)->required();
  sc->add_flag("--only-disagreements", only_disagreements, "Report disagreements only");

  auto* tw = app.add_subcommand("twelve", "Check the twelve k=5 families for m = 6n..6n+5");
  tw->add_option("n", x)->required();

  bool sweep = false;
  auto* red = app.add_subcommand("reduction", "Check the 2k-6 reduction inequality");
  red->add_option("k", x)->required();
  red->add_option("b", y)->required();
  red->add_flag("--sweep", sweep, "Check every admissible b up to the given one");

  bool rs_all = false;
  auto* rs = app.add_subcommand("rs-scan", "Check the Reiner-Stanton slice for 2 <= k <= k_max, m <= m_max");
  rs->add_option("k_max", x)->required();
  rs->add_option("m_max", y)->required();
  rs->add_flag("--all", rs_all, "Report every spec, not only failures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qkoh: " << e.what() << '\n';
    return kUsage;
  }

  cfg.format = format == "json" ? Format::Json : (format == "csv" ? Format::Csv : Format::Text);
  if (cfg.cache_path.empty()) {
    if (const char* env = std::getenv(kCacheEnv)) cfg.cache_path = env;
  }

  try {
    cfg.thresholds = parse_thresholds(cfg.threshold_overrides);
  } catch (const std::exception& e) {
    err << "qkoh: " << e.what() << '\n';
    return kUsage;
  }

  auto& cache = default_qbinomial_cache();
  if (!cfg.cache_path.empty() && std::filesystem::exists(cfg.cache_path)) {
    std::string warning;
    if (!cache.load(cfg.cache_path, &warning)) err << "qkoh: warning: " << warning << '\n';
  }

  int code = kOk;
  try {
    if (qb->parsed()) {
      write_poly(out, qbinomial(x, y), cfg.format);
    } else if (koh->parsed()) {
      code = cmd_koh(out, x, y, cfg.format);
    } else if (f->parsed()) {
      write_poly(out, f_poly(make_diff_spec(x, y, z)), cfg.format);
    } else if (chk->parsed()) {
      code = cmd_check(out, make_diff_spec(x, y, z), cfg);
    } else if (sc->parsed()) {
      if (x < 2 || y > z) {
        err << "qkoh: scan needs k >= 2 and m_lo <= m_hi\n";
        return kUsage;
      }
      ScanOptions opts{cfg.thresholds, cfg.workers, only_disagreements};
      auto reports = scan(x, y, z, opts);
      const std::size_t bad = only_disagreements ? reports.size() : count_disagreements(reports);
      write_reports(out, reports, cfg.format);
      code = bad == 0 ? kOk : kDisagreement;
    } else if (tw->parsed()) {
      const auto reports = check_all(twelve_cases(x), cfg.thresholds, cfg.workers);
      write_reports(out, reports, cfg.format);
      for (const auto& r : reports) {
        if (!r.passes() || !r.agrees_with_prediction) code = kDisagreement;
      }
    } else if (red->parsed()) {
      std::vector<std::int64_t> bs;
      if (sweep) {
        for (std::int64_t b = 3 * x - 8; b <= y; ++b) bs.push_back(b);
      } else {
        bs.push_back(y);
      }
      Json rows = Json::array();
      for (auto b : bs) {
        const Verdict v = reduction_inequality(x, b);
        if (!v.holds) code = kDisagreement;
        if (cfg.format == Format::Json) {
          rows.push_back({{"k", x},
                          {"b", b},
                          {"holds", v.holds},
                          {"first_failure", v.first_failure ? Json(*v.first_failure) : Json(nullptr)}});
        } else if (cfg.format == Format::Csv) {
          if (b == bs.front()) out << "k,b,holds,first_failure\n";
          out << x << ',' << b << ',' << (v.holds ? "true" : "false") << ','
              << (v.first_failure ? std::to_string(*v.first_failure) : "") << '\n';
        } else {
          out << "reduction k=" << x << " b=" << b << ": " << (v.holds ? "holds" : "FAILS");
          if (v.first_failure) out << " at degree " << *v.first_failure;
          out << '\n';
        }
      }
      if (cfg.format == Format::Json) out << rows.dump(1) << '\n';
    } else if (rs->parsed()) {
      std::vector<DiffSpec> specs;
      for (std::int64_t k = 2; k <= x; ++k) {
        for (std::int64_t m = k; m <= y; ++m) {
          for (const auto& s : reiner_stanton_correspondence(k, m)) specs.push_back(s);
        }
      }
      auto reports = check_all(specs, cfg.thresholds, cfg.workers);
      if (!rs_all) std::erase_if(reports, [](const CheckReport& r) { return r.passes(); });
      write_reports(out, reports, cfg.format);
    }
  } catch (const InvalidSpec& e) {
    err << "qkoh: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "qkoh: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "qkoh: " << e.what() << '\n';
    return kUsage;
  }

  if (!cfg.cache_path.empty()) {
    try {
      cache.save(cfg.cache_path);
    } catch (const std::exception& e) {
      err << "qkoh: warning: " << e.what() << '\n';
    }
  }
  return code;
}

}  // namespace qkoh::cli
