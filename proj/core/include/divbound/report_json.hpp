#pragma once

#include <optional>
#include <utility>
#include <span>
#include <string>
#include <vector>

#include "divbound/hull.hpp"
#include "divbound/rho.hpp"
#include "divbound/verify/cases.hpp"
#include "divbound/verify/champions.hpp"
#include "divbound/verify/grid.hpp"
#include "divbound/verify/lemmas.hpp"
#include "divbound/verify/scan.hpp"

namespace divbound {

// Single-line JSON objects with a fixed key order. Each carries a "kind"
// field naming the record type. Non-finite doubles are written as null.
std::string to_json_line(const RhoReport& report);
std::string to_json_line(const GridCertificate& cert);
std::string to_json_line(const ScanReport& report);
std::string to_json_line(const K2Result& result);
std::string to_json_line(const LargeCaseReport& report);
std::string to_json_line(const LargeEndpointAudit& audit);
std::string to_json_line(const TailAudit& audit);
std::string to_json_line(const LemmaReport& report);
std::string to_json_line(const ChampionResult& result);
std::string to_json_line(const KappaResult& result);
std::string to_json_line(const Theorem2Witness& witness);

// Aggregate over a family of grid certificates ("verify-mid", "verify-small"):
// count, failures, total points, minimum slack and, if given, wall time.
std::string certificates_summary_json(const std::string& name,
                                      std::span<const GridCertificate> certs,
                                      std::optional<double> wall_seconds = std::nullopt);

// Aggregate over scan segments.
std::string scan_summary_json(const ScanReport& total, std::size_t segments,
                              std::optional<double> wall_seconds = std::nullopt);

struct RunSummary {
  std::string command;
  bool pass = false;
  std::vector<std::pair<std::string, bool>> parts;
  std::optional<double> wall_seconds;
};
std::string to_json_line(const RunSummary& summary);

}  // namespace divbound
