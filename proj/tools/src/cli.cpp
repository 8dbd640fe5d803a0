#include "divbound_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divbound/arith.hpp"
#include "divbound/hull.hpp"
#include "divbound/primes.hpp"
#include "divbound/report_json.hpp"
#include "divbound/rho.hpp"
#include "divbound/verify/cases.hpp"
#include "divbound/verify/champions.hpp"
#include "divbound/verify/lemmas.hpp"
#include "divbound/verify/scan.hpp"

namespace divbound::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  unsigned workers = 0;
  std::string output;
  std::size_t primes = PrimeTable::kDefaultCount;
  std::string prime_cache;
  bool no_escalate = false;
  bool timing = false;
};

struct RhoOptions {
  std::string pow;
  std::uint64_t n = 0;
};

struct ScanOptions {
  std::uint64_t from = kScanMinN;
  std::uint64_t to = kScanDefaultCeiling;
  bool full = false;
  std::uint64_t segment = kScanDefaultSegment;
};

struct ChampionOptions {
  double limit_log = 40.0;
  std::size_t top = 20;
};

struct HullOptions {
  std::size_t s_max = 50;
  std::size_t points = 1001;
};

struct WitnessOptions {
  double theta = 0.0;
  double z_log = 0.0;
};

struct RangeOptions {
  std::size_t k_lo = 0;
  std::size_t k_hi = 0;
  std::optional<double> delta;
  std::optional<double> m1;
};

struct LargeOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
};

struct LemmaCliOptions {
  std::size_t k_max = 100000;
  std::uint64_t seed = LemmaOptions{}.seed;
};

struct AllOptions {
  bool full = false;
  std::optional<std::uint64_t> scan_to;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

// Shared state of one invocation.
class Session {
 public:
  Session(const GlobalOptions& globals, std::ostream& out, std::ostream& err)
      : globals_(globals), err_(err) {
    if (!globals.output.empty()) {
      file_ = std::make_unique<std::ofstream>(globals.output, std::ios::trunc);
      if (!*file_) throw std::runtime_error("cannot open output file " + globals.output);
      out_ = file_.get();
    } else {
      out_ = &out;
    }
  }

  void emit(const std::string& line) { *out_ << line << '\n'; }
  std::ostream& raw() { return *out_; }
  std::ostream& note() { return err_; }

  bool escalate() const { return !globals_.no_escalate; }
  unsigned workers() const { return globals_.workers; }
  std::optional<double> wall(Clock::time_point start) const {
    if (!globals_.timing) return std::nullopt;
    return seconds_since(start);
  }

  // Builds (or loads) a table with at least `needed` primes.
  const PrimeTable& table(std::size_t needed) {
    std::size_t count = std::max(globals_.primes, needed);
    if (count > PrimeTable::kMaxCount) {
      throw UsageError("prime table would need " + std::to_string(count) + " primes (max " +
                       std::to_string(PrimeTable::kMaxCount) + ")");
    }
    if (!table_ || table_->size() < count) {
      table_ = std::make_unique<PrimeTable>(PrimeTable::load_or_build(count, cache_path()));
    }
    return *table_;
  }

 private:
  std::filesystem::path cache_path() const {
    if (!globals_.prime_cache.empty()) return globals_.prime_cache;
    if (const char* dir = std::getenv(kCacheDirEnv); dir != nullptr && *dir != '\0') {
      return std::filesystem::path(dir) / "primes.bin";
    }
    return {};
  }

  GlobalOptions globals_;
  std::ostream& err_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = nullptr;
  std::unique_ptr<PrimeTable> table_;
};

GridParams apply_overrides(GridParams params, const RangeOptions& options) {
  if (options.delta) params.delta = *options.delta;
  if (options.m1) params.m1 = *options.m1;
  return params;
}

void validate_overrides(const RangeOptions& options) {
  if (options.delta && !(*options.delta > 0.0)) throw UsageError("--delta must be > 0");
  if (options.m1 && !(*options.m1 >= 0.0)) throw UsageError("--m1 must be >= 0");
}

// Each part returns true when everything it certifies holds.

bool run_rho(Session& s, const RhoOptions& o, bool have_pow) {
  Factorization f = have_pow ? parse_factored(o.pow) : factorize(o.n);
  RhoReport report = rho(f, s.escalate());
  s.emit(to_json_line(report));
  s.note() << "rho(" << report.n << ") = " << fixed(report.rho, 17) << '\n';
  return true;
}

bool run_scan(Session& s, const ScanOptions& o) {
  auto start = Clock::now();
  ScanSummary summary = scan_range(o.from, o.to, s.workers(), o.segment);
  for (const auto& segment : summary.segments) s.emit(to_json_line(segment));
  s.emit(scan_summary_json(summary.total, summary.segments.size(), s.wall(start)));
  s.note() << "scan [" << o.from << ", " << o.to << "]: " << summary.total.count_checked
           << " integers, max rho " << fixed(summary.total.max_rho, 10) << " at n="
           << summary.total.argmax_n << ", " << summary.total.violations.size() << " violations ("
           << fixed(seconds_since(start), 3) << " s)\n";
  return summary.total.violations.empty();
}

// Below log(2^26 3^16) nothing may reach 2; above it the champion must be the
// strict maximum.
bool champion_ok(const ChampionResult& result, double limit_log) {
  const double champion_log = 26.0 * std::log(2.0) + 16.0 * std::log(3.0);
  if (limit_log < champion_log) return result.at_least_two == 0;
  if (result.top.empty() || result.top.front().n != "2^26*3^16") return false;
  return result.top.size() < 2 || result.top[1].rho < result.top.front().rho;
}

bool run_champions(Session& s, const ChampionOptions& o) {
  auto start = Clock::now();
  ChampionResult result =
      champion_search(s.table(PrimeTable::kDefaultCount), o.limit_log, o.top, s.workers());
  s.emit(to_json_line(result));
  s.note() << "champions (log n <= " << o.limit_log << "): " << result.evaluated
           << " primary integers, " << result.at_least_two << " with rho >= 2";
  if (!result.top.empty()) {
    s.note() << ", top " << result.top.front().n << " rho=" << fixed(result.top.front().rho, 12);
  }
  s.note() << " (" << fixed(seconds_since(start), 3) << " s)\n";
  return champion_ok(result, o.limit_log);
}

bool run_kappa(Session& s, std::size_t k_max) {
  KappaResult result = kappa_search(s.table(k_max), k_max);
  s.emit(to_json_line(result));
  s.note() << "kappa = " << fixed(result.kappa, 12) << " at k=" << result.k << '\n';
  return true;
}

bool run_hull(Session& s, const HullOptions& o) {
  HullFunction hull = HullFunction::build(o.s_max);
  write_hull_csv(s.raw(), hull, o.points);
  s.note() << "hull: " << hull.vertices().size() << " vertices, " << o.points << " rows\n";
  return true;
}

bool run_witness(Session& s, const WitnessOptions& o) {
  const double k_bound = o.z_log / std::log(o.z_log);
  Theorem2Witness w =
      theorem2_witness(s.table(static_cast<std::size_t>(k_bound) + 1), o.theta, o.z_log);
  s.emit(to_json_line(w));
  s.note() << "witness theta=" << o.theta << " z_log=" << o.z_log << ": ratio "
           << fixed(w.ratio, 10) << " (f = " << fixed(hull_closed_form(o.theta), 10)
           << "), theta_actual " << fixed(w.theta_actual, 10) << '\n';
  return true;
}

bool emit_certificates(Session& s, const std::string& name, const std::vector<GridCertificate>& certs,
                       Clock::time_point start) {
  for (const auto& c : certs) s.emit(to_json_line(c));
  s.emit(certificates_summary_json(name, certs, s.wall(start)));
  std::size_t failed = 0;
  const GridCertificate* tightest = nullptr;
  for (const auto& c : certs) {
    if (!c.pass) ++failed;
    if (tightest == nullptr || c.slack < tightest->slack) tightest = &c;
  }
  s.note() << name << ": " << certs.size() << " certificates, " << failed << " failed";
  if (tightest != nullptr) {
    s.note() << ", min slack " << fixed(tightest->slack, 6) << " at k=" << tightest->k;
  }
  s.note() << " (" << fixed(seconds_since(start), 3) << " s)\n";
  return failed == 0 && !certs.empty();
}

bool run_verify_mid(Session& s, const RangeOptions& o) {
  auto start = Clock::now();
  auto certs = verify_mid_range(s.table(o.k_hi), o.k_lo, o.k_hi, s.workers(), s.escalate(),
                                apply_overrides(kMidParams, o));
  return emit_certificates(s, "verify-mid", certs, start);
}

bool run_verify_small(Session& s, const RangeOptions& o) {
  auto start = Clock::now();
  auto certs = verify_small_range(s.table(o.k_hi), o.k_lo, o.k_hi, s.workers(), s.escalate(),
                                  apply_overrides(kSmallParams, o));
  return emit_certificates(s, "verify-small", certs, start);
}

bool run_verify_k2(Session& s) {
  auto start = Clock::now();
  K2Result result = verify_k2(s.table(2), s.escalate());
  s.emit(to_json_line(result));
  s.note() << "verify-k2: grid slack " << fixed(result.grid.slack, 6) << ", " << result.candidates
           << " candidates, maximizer " << result.champion.to_string() << " rho="
           << fixed(result.champion_rho, 12) << ", runner-up " << result.runner_up.to_string()
           << " rho=" << fixed(result.runner_up_rho, 12) << (result.pass ? " PASS" : " FAIL")
           << " (" << fixed(seconds_since(start), 3) << " s)\n";
  return result.pass;
}

bool run_verify_large(Session& s, const LargeOptions& o) {
  LargeEndpointAudit endpoints = large_case_endpoints(s.table(kLargeFirstK));
  s.emit(to_json_line(endpoints));
  auto samples = random_large_samples(o.samples, o.seed);
  LargeCaseReport report = check_case_large(samples);
  s.emit(to_json_line(report));
  s.note() << "verify-large (predicate audit, not a proof): loglog n_11000 = "
           << fixed(endpoints.loglog_n_11000, 10) << ", " << report.samples << " samples, "
           << report.failures.size() << " failures\n";
  return endpoints.pass && report.pass;
}

bool run_lemmas(Session& s, const LemmaCliOptions& o) {
  auto start = Clock::now();
  LemmaOptions options;
  options.k_max = o.k_max;
  options.seed = o.seed;
  LemmaReport report = lemma_suite(s.table(std::max<std::size_t>(o.k_max, 200)), options);
  s.emit(to_json_line(report));
  for (const auto& c : report.checks) {
    s.note() << "lemma " << c.name << ": " << c.checked << " checked, " << c.violations
             << " violations\n";
  }
  s.note() << "lemmas: " << (report.pass() ? "PASS" : "FAIL") << " ("
           << fixed(seconds_since(start), 3) << " s)\n";
  return report.pass();
}

void emit_coverage(Session& s, const std::string& region, const std::string& certified_by,
                   bool pass) {
  Json j;
  j["kind"] = "coverage";
  j["region"] = region;
  j["certified_by"] = certified_by;
  j["pass"] = pass;
  s.emit(j.dump());
}

bool run_all(Session& s, const AllOptions& o) {
  auto start = Clock::now();
  const std::uint64_t scan_to =
      o.scan_to ? *o.scan_to : (o.full ? kScanFullCeiling : kScanDefaultCeiling);
  const PrimeTable& table = s.table(LemmaCliOptions{}.k_max);

  RunSummary summary;
  summary.command = "all";
  auto part = [&](const std::string& name, bool ok) {
    summary.parts.emplace_back(name, ok);
    return ok;
  };

  bool scan_ok = part("scan", run_scan(s, ScanOptions{kScanMinN, scan_to, false, kScanDefaultSegment}));
  bool champions_ok = part("champions", run_champions(s, ChampionOptions{}));
  part("kappa", run_kappa(s, 10000));
  bool small_ok = part("verify-small", run_verify_small(s, RangeOptions{1, kSmallLastK, {}, {}}));
  bool k2_ok = part("verify-k2", run_verify_k2(s));
  bool mid_ok = part("verify-mid", run_verify_mid(s, RangeOptions{kMidFirstK, kMidLastK, {}, {}}));

  TailAudit small_tail = audit_small_tail(table);
  s.emit(to_json_line(small_tail));
  TailAudit mid_tail = audit_mid_tail();
  s.emit(to_json_line(mid_tail));
  bool small_tail_ok = part("small-tail", small_tail.pass);
  bool mid_tail_ok = part("mid-tail", mid_tail.pass);
  s.note() << "tails: small worst bound " << fixed(small_tail.worst, 6) << ", mid worst margin "
           << fixed(mid_tail.worst, 6) << '\n';

  bool large_ok = part("verify-large", run_verify_large(s, LargeOptions{}));
  part("lemmas", run_lemmas(s, LemmaCliOptions{}));

  emit_coverage(s, "17 <= n <= " + std::to_string(scan_to), "scan", scan_ok);
  emit_coverage(s, "primary 17 <= n <= e^40 (covers n <= 1e9 after reduction to primary integers)",
                "champions", champions_ok);
  emit_coverage(s, "omega in [1,43] minus {2}, loglog n in [loglog max(1e9, n_k), 9.36]",
                "verify-small", small_ok);
  emit_coverage(s, "omega = 2, n > 1e9, loglog n <= 4", "verify-k2 exhaustion", k2_ok);
  emit_coverage(s, "omega = 2, loglog n in [4, 9.36]", "verify-k2 grid", k2_ok);
  emit_coverage(s, "omega in [1,43], loglog n > 9.36", "small-tail bound (sampled to x = 60)",
                small_tail_ok);
  emit_coverage(s, "omega in [44,10999], loglog n in [loglog n_k, 1.8 log k]", "verify-mid", mid_ok);
  emit_coverage(s, "omega in [44,10999], loglog n > 1.8 log k", "mid-tail margin", mid_tail_ok);
  emit_coverage(s, "omega >= 11000, loglog n >= loglog n_11000 > 11.66",
                "verify-large predicate audit", large_ok);

  summary.pass = std::all_of(summary.parts.begin(), summary.parts.end(),
                             [](const auto& p) { return p.second; });
  summary.wall_seconds = s.wall(start);
  s.emit(to_json_line(summary));
  s.note() << "all: " << (summary.pass ? "PASS" : "FAIL") << " (" << fixed(seconds_since(start), 1)
           << " s)\n";
  return summary.pass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification toolkit for the explicit divisor-count bound rho(n) < 2", "divbound"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  GlobalOptions globals;
  app.add_option("--workers", globals.workers, "Worker threads (0 = all cores)");
  app.add_option("--output,-o", globals.output, "Write JSON lines to this file instead of stdout");
  app.add_option("--primes", globals.primes, "Minimum prime-table size")
      ->check(CLI::Range(std::size_t{1}, PrimeTable::kMaxCount));
  app.add_option("--prime-cache", globals.prime_cache,
                 std::string("Prime-table cache file (default: $") + kCacheDirEnv + "/primes.bin)");
  app.add_flag("--no-escalate", globals.no_escalate, "Disable 113-bit re-evaluation of marginal results");
  app.add_flag("--timing", globals.timing, "Include wall time in JSON summaries");

  RhoOptions rho_o;
  auto* rho_cmd = app.add_subcommand("rho", "Evaluate rho(n) for a factored or 64-bit integer");
  auto* pow_opt = rho_cmd->add_option("--pow", rho_o.pow, "Factored form, e.g. 2^26*3^16");
  auto* n_opt = rho_cmd->add_option("--n", rho_o.n, "Integer below 2^64");
  pow_opt->excludes(n_opt);
  rho_cmd->require_option(1);

  ScanOptions scan_o;
  auto* scan_cmd = app.add_subcommand("scan", "Evaluate rho(n) for every n in a range");
  scan_cmd->add_option("--from", scan_o.from, "First n (>= 17)");
  auto* to_opt = scan_cmd->add_option("--to", scan_o.to, "Last n (default 1e8)");
  scan_cmd->add_flag("--full", scan_o.full, "Scan to 1e9")->excludes(to_opt);
  scan_cmd->add_option("--segment", scan_o.segment, "Sieve segment length");

  ChampionOptions champ_o;
  auto* champ_cmd = app.add_subcommand("champions", "Rank primary integers by rho");
  champ_cmd->add_option("--limit-log", champ_o.limit_log, "Upper bound on log n (>= log 1e9)");
  champ_cmd->add_option("--top", champ_o.top, "Number of records to keep");

  std::size_t kappa_kmax = 10000;
  auto* kappa_cmd = app.add_subcommand("kappa", "Maximise theta over primorials");
  kappa_cmd->add_option("--kmax", kappa_kmax, "Largest k (>= 9)");

  HullOptions hull_o;
  auto* hull_cmd = app.add_subcommand("hull", "Write f(theta) on a uniform grid as CSV");
  hull_cmd->add_option("--smax", hull_o.s_max, "Largest s with an explicit vertex");
  hull_cmd->add_option("--points", hull_o.points, "Rows in [0, 1] (>= 2)");

  WitnessOptions witness_o;
  auto* witness_cmd = app.add_subcommand("witness", "Build the integer m1^(s+1) m2^s for theta");
  witness_cmd->add_option("--theta", witness_o.theta, "theta in (0, 1]")->required();
  witness_cmd->add_option("--zlog", witness_o.z_log, "log z")->required();

  RangeOptions mid_o{kMidFirstK, kMidLastK, {}, {}};
  auto* mid_cmd = app.add_subcommand("verify-mid", "Grid certificates for 44 <= k <= 10999");
  mid_cmd->add_option("--k-lo", mid_o.k_lo, "First k");
  mid_cmd->add_option("--k-hi", mid_o.k_hi, "Last k");
  mid_cmd->add_option("--delta", mid_o.delta, "Grid step override");
  mid_cmd->add_option("--m1", mid_o.m1, "Derivative bound override");

  RangeOptions small_o{1, kSmallLastK, {}, {}};
  auto* small_cmd = app.add_subcommand("verify-small", "Grid certificates for k <= 43, k != 2");
  small_cmd->add_option("--k-lo", small_o.k_lo, "First k");
  small_cmd->add_option("--k-hi", small_o.k_hi, "Last k");
  small_cmd->add_option("--delta", small_o.delta, "Grid step override");
  small_cmd->add_option("--m1", small_o.m1, "Derivative bound override");

  auto* k2_cmd = app.add_subcommand("verify-k2", "Grid on [4, 9.36] plus the 2^a 3^b exhaustion");

  LargeOptions large_o;
  auto* large_cmd = app.add_subcommand("verify-large", "Predicate audit for k >= 11000");
  large_cmd->add_option("--samples", large_o.samples, "Random (k, x) samples");
  large_cmd->add_option("--seed", large_o.seed, "Sampler seed");

  LemmaCliOptions lemma_o;
  auto* lemma_cmd = app.add_subcommand("lemmas", "Prime-sum inequalities and sampled bounds");
  lemma_cmd->add_option("--kmax", lemma_o.k_max, "Largest k for the prime-sum checks (>= 44)");
  lemma_cmd->add_option("--seed", lemma_o.seed, "Sampler seed");

  AllOptions all_o;
  auto* all_cmd = app.add_subcommand("all", "Full pipeline with coverage audit");
  auto* all_full = all_cmd->add_flag("--full", all_o.full, "Scan to 1e9");
  all_cmd->add_option("--scan-to", all_o.scan_to, "Scan ceiling override")->excludes(all_full);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    // Ranges are validated before any computation starts.
    if (chosen == scan_cmd) {
      if (scan_o.full) scan_o.to = kScanFullCeiling;
      if (scan_o.from < kScanMinN) throw UsageError("--from must be >= 17");
      if (scan_o.from > scan_o.to) throw UsageError("--from must be <= --to");
      if (scan_o.to > kScanHardCeiling) throw UsageError("--to must be <= 1e12");
      if (scan_o.segment == 0) throw UsageError("--segment must be >= 1");
    } else if (chosen == champ_cmd) {
      if (!(champ_o.limit_log >= std::log(1e9))) throw UsageError("--limit-log must be >= log 1e9");
      if (!(champ_o.limit_log <= 60.0)) throw UsageError("--limit-log must be <= 60");
      if (champ_o.top == 0) throw UsageError("--top must be >= 1");
    } else if (chosen == kappa_cmd) {
      if (kappa_kmax < 9) throw UsageError("--kmax must be >= 9");
    } else if (chosen == hull_cmd) {
      if (hull_o.s_max == 0) throw UsageError("--smax must be >= 1");
      if (hull_o.points < 2) throw UsageError("--points must be >= 2");
    } else if (chosen == witness_cmd) {
      if (!(witness_o.theta > 0.0 && witness_o.theta <= 1.0)) throw UsageError("--theta must be in (0, 1]");
      if (!(witness_o.z_log > std::exp(1.0))) throw UsageError("--zlog must exceed e");
    } else if (chosen == mid_cmd) {
      if (mid_o.k_lo < kMidFirstK || mid_o.k_hi > kMidLastK || mid_o.k_lo > mid_o.k_hi) {
        throw UsageError("verify-mid needs 44 <= --k-lo <= --k-hi <= 10999");
      }
      validate_overrides(mid_o);
    } else if (chosen == small_cmd) {
      if (small_o.k_lo < 1 || small_o.k_hi > kSmallLastK || small_o.k_lo > small_o.k_hi ||
          (small_o.k_lo == 2 && small_o.k_hi == 2)) {
        throw UsageError("verify-small needs 1 <= --k-lo <= --k-hi <= 43 (k = 2 is verify-k2)");
      }
      validate_overrides(small_o);
    } else if (chosen == large_cmd) {
      if (large_o.samples == 0) throw UsageError("--samples must be >= 1");
    } else if (chosen == lemma_cmd) {
      if (lemma_o.k_max < 44) throw UsageError("--kmax must be >= 44");
    } else if (chosen == all_cmd) {
      if (all_o.scan_to && (*all_o.scan_to < kScanMinN || *all_o.scan_to > kScanHardCeiling)) {
        throw UsageError("--scan-to must be in [17, 1e12]");
      }
    }

    Session session(globals, out, err);
    bool pass = true;
    if (chosen == rho_cmd) {
      pass = run_rho(session, rho_o, pow_opt->count() > 0);
    } else if (chosen == scan_cmd) {
      pass = run_scan(session, scan_o);
    } else if (chosen == champ_cmd) {
      pass = run_champions(session, champ_o);
    } else if (chosen == kappa_cmd) {
      pass = run_kappa(session, kappa_kmax);
    } else if (chosen == hull_cmd) {
      pass = run_hull(session, hull_o);
    } else if (chosen == witness_cmd) {
      pass = run_witness(session, witness_o);
    } else if (chosen == mid_cmd) {
      pass = run_verify_mid(session, mid_o);
    } else if (chosen == small_cmd) {
      pass = run_verify_small(session, small_o);
    } else if (chosen == k2_cmd) {
      pass = run_verify_k2(session);
    } else if (chosen == large_cmd) {
      pass = run_verify_large(session, large_o);
    } else if (chosen == lemma_cmd) {
      pass = run_lemmas(session, lemma_o);
    } else if (chosen == all_cmd) {
      pass = run_all(session, all_o);
    }
    return pass ? kExitOk : kExitCertificateFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << chosen->help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << chosen->help();
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n\n" << chosen->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace divbound::cli
