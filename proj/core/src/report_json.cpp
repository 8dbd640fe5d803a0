#include "divbound/report_json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include <json.hpp>

namespace divbound {
namespace {

using Json = nlohmann::ordered_json;

Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

Json certificate_object(const GridCertificate& c) {
  Json j;
  j["kind"] = "grid_certificate";
  j["k"] = c.k;
  j["alpha"] = number(c.alpha);
  j["beta"] = number(c.beta);
  j["delta"] = number(c.delta);
  j["m1"] = number(c.m1);
  j["grid_max"] = number(c.grid_max);
  j["argmax"] = number(c.argmax);
  j["threshold"] = number(c.threshold);
  j["slack"] = number(c.slack);
  j["points"] = c.points_evaluated;
  j["escalated"] = c.escalated;
  j["pass"] = c.pass;
  if (!c.diagnostic.empty()) j["diagnostic"] = c.diagnostic;
  return j;
}

Json rho_object(const RhoReport& r) {
  Json j;
  j["kind"] = "rho";
  j["n"] = r.n;
  j["log_n"] = number(r.n_log);
  j["omega"] = r.omega;
  j["log_tau"] = number(r.tau_log);
  j["theta"] = number(r.theta);
  j["rho"] = number(r.rho);
  j["exceeds_two"] = r.exceeds_two;
  j["in_theorem_range"] = r.in_theorem_range;
  j["escalated"] = r.escalated;
  return j;
}

std::string dump(const Json& j) { return j.dump(-1, ' ', false, Json::error_handler_t::replace); }

}  // namespace

std::string to_json_line(const RhoReport& report) { return dump(rho_object(report)); }

std::string to_json_line(const GridCertificate& cert) { return dump(certificate_object(cert)); }

std::string to_json_line(const ScanReport& report) {
  Json j;
  j["kind"] = "scan";
  j["n_lo"] = report.n_lo;
  j["n_hi"] = report.n_hi;
  j["checked"] = report.count_checked;
  j["max_rho"] = number(report.max_rho);
  j["argmax_n"] = report.argmax_n;
  j["escalations"] = report.escalations;
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back({{"n", v.n}, {"rho", number(v.rho)}});
  j["violations"] = std::move(violations);
  j["pass"] = report.violations.empty();
  return dump(j);
}

std::string to_json_line(const K2Result& result) {
  Json j;
  j["kind"] = "verify_k2";
  j["grid"] = certificate_object(result.grid);
  j["candidates"] = result.candidates;
  j["champion"] = result.champion.to_string();
  j["champion_rho"] = number(result.champion_rho);
  j["runner_up"] = result.runner_up.to_string();
  j["runner_up_rho"] = number(result.runner_up_rho);
  j["at_least_two"] = result.at_least_two;
  j["maximizer_count"] = result.maximizer_count;
  j["pass"] = result.pass;
  return dump(j);
}

std::string to_json_line(const LargeCaseReport& report) {
  Json j;
  j["kind"] = "verify_large";
  j["samples"] = report.samples;
  Json regimes;
  for (std::size_t r = 0; r < kLargeRegimeCount; ++r) {
    regimes[to_string(static_cast<LargeRegime>(r))] = report.per_regime[r];
  }
  j["per_regime"] = std::move(regimes);
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"k", f.k},
                        {"x", number(f.x)},
                        {"t", number(f.t)},
                        {"regime", to_string(f.regime)},
                        {"detail", f.detail}});
  }
  j["failures"] = std::move(failures);
  j["pass"] = report.pass;
  return dump(j);
}

std::string to_json_line(const LargeEndpointAudit& audit) {
  Json j;
  j["kind"] = "large_endpoints";
  j["loglog_n_11000"] = number(audit.loglog_n_11000);
  j["above_min_x"] = audit.above_min_x;
  j["mid_margin_at_1_8"] = number(audit.mid_margin_at_18);
  j["parabola_at_boundary"] = audit.parabola_at_boundary;
  j["small_t_at_boundary"] = audit.small_t_at_boundary;
  j["pass"] = audit.pass;
  return dump(j);
}

std::string to_json_line(const TailAudit& audit) {
  Json j;
  j["kind"] = "tail_audit";
  j["name"] = audit.name;
  j["k_lo"] = audit.k_lo;
  j["k_hi"] = audit.k_hi;
  j["x_lo"] = number(audit.x_lo);
  j["x_hi"] = number(audit.x_hi);
  j["points"] = audit.points;
  j["worst"] = number(audit.worst);
  j["pass"] = audit.pass;
  return dump(j);
}

std::string to_json_line(const LemmaReport& report) {
  Json j;
  j["kind"] = "lemmas";
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"range", c.range},
                      {"checked", c.checked},
                      {"violations", c.violations},
                      {"worst_margin", number(c.worst_margin)},
                      {"examples", c.examples}});
  }
  j["checks"] = std::move(checks);
  j["pass"] = report.pass();
  return dump(j);
}

std::string to_json_line(const ChampionResult& result) {
  Json j;
  j["kind"] = "champions";
  j["evaluated"] = result.evaluated;
  j["at_least_two"] = result.at_least_two;
  Json top = Json::array();
  for (const auto& r : result.top) top.push_back(rho_object(r));
  j["top"] = std::move(top);
  return dump(j);
}

std::string to_json_line(const KappaResult& result) {
  Json j;
  j["kind"] = "kappa";
  j["k"] = result.k;
  j["kappa"] = number(result.kappa);
  return dump(j);
}

std::string to_json_line(const Theorem2Witness& witness) {
  Json j;
  j["kind"] = "witness";
  j["m"] = witness.m.to_string();
  j["log_m"] = number(witness.m.value_log());
  j["s"] = witness.s;
  j["m1_primes"] = witness.m1_primes;
  j["omega"] = witness.last_index;
  j["theta_actual"] = number(witness.theta_actual);
  j["ratio"] = number(witness.ratio);
  return dump(j);
}

std::string certificates_summary_json(const std::string& name,
                                      std::span<const GridCertificate> certs,
                                      std::optional<double> wall_seconds) {
  Json j;
  j["kind"] = "certificate_summary";
  j["name"] = name;
  j["count"] = certs.size();
  std::size_t failed = 0;
  std::size_t escalated = 0;
  std::uint64_t points = 0;
  const GridCertificate* tightest = nullptr;
  for (const auto& c : certs) {
    points += c.points_evaluated;
    if (!c.pass) ++failed;
    if (c.escalated) ++escalated;
    if (tightest == nullptr || c.slack < tightest->slack) tightest = &c;
  }
  j["failed"] = failed;
  j["escalated"] = escalated;
  j["points"] = points;
  if (tightest != nullptr) {
    j["min_slack"] = number(tightest->slack);
    j["min_slack_k"] = tightest->k;
  }
  j["pass"] = !certs.empty() && failed == 0;
  if (wall_seconds) j["wall_seconds"] = *wall_seconds;
  return dump(j);
}

std::string scan_summary_json(const ScanReport& total, std::size_t segments,
                              std::optional<double> wall_seconds) {
  Json j;
  j["kind"] = "scan_summary";
  j["n_lo"] = total.n_lo;
  j["n_hi"] = total.n_hi;
  j["segments"] = segments;
  j["checked"] = total.count_checked;
  j["max_rho"] = number(total.max_rho);
  j["argmax_n"] = total.argmax_n;
  j["escalations"] = total.escalations;
  Json violations = Json::array();
  for (const auto& v : total.violations) violations.push_back({{"n", v.n}, {"rho", number(v.rho)}});
  j["violations"] = std::move(violations);
  j["pass"] = total.violations.empty();
  if (wall_seconds) j["wall_seconds"] = *wall_seconds;
  return dump(j);
}

std::string to_json_line(const RunSummary& summary) {
  Json j;
  j["kind"] = "summary";
  j["command"] = summary.command;
  Json parts;
  for (const auto& [name, ok] : summary.parts) parts[name] = ok;
  j["parts"] = std::move(parts);
  j["pass"] = summary.pass;
  if (summary.wall_seconds) j["wall_seconds"] = *summary.wall_seconds;
  return dump(j);
}

}  // namespace divbound
