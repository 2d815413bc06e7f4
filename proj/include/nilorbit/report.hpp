#pragma once

#include <ostream>
#include <span>
#include <string_view>

#include <json.hpp>

#include "nilorbit/classify.hpp"
#include "nilorbit/modp.hpp"
#include "nilorbit/orbits.hpp"
#include "nilorbit/verify.hpp"

namespace nilorbit {

inline constexpr std::string_view kSchemaVersion = "nilorbit/1";

enum class Format { Json, Csv, Text };

/// "json", "csv" or "text". Throws Error{Parse}.
Format parse_format(std::string_view text);

/// JSON number when the value fits in int64, decimal string otherwise.
nlohmann::json integer_json(const Integer& value);

nlohmann::json orbit_json(const Polynomial& u, const Integer& r, const OrbitOutcome& outcome);
/// A non-empty trajectory (u^(1)(r), u^(2)(r), ... mod p) is included.
nlohmann::json modp_json(const Polynomial& u, const Integer& r, const ModPResult& result,
                         std::span<const std::uint64_t> trajectory = {});
nlohmann::json scan_json(const ScanReport& report);
nlohmann::json classification_json(const Classification& c);
/// Per-verdict counts, contradictions and inconclusives; entries are omitted.
nlohmann::json validation_json(const ValidationReport& report);
nlohmann::json suite_json(const SuiteResult& suite);
nlohmann::json explore_json(const ExploreReport& report);

/// Every writer emits a complete document ending in a newline. Timing is
/// left out of JSON and CSV so repeated runs are byte-identical.
void write_orbit(std::ostream& out, const Polynomial& u, const Integer& r, const OrbitOutcome& outcome,
                 Format format);
void write_modp(std::ostream& out, const Polynomial& u, const Integer& r, const ModPResult& result,
                Format format, std::span<const std::uint64_t> trajectory = {});
void write_scan(std::ostream& out, const ScanReport& report, Format format);
void write_classification(std::ostream& out, const Classification& c, Format format);
void write_suite(std::ostream& out, const SuiteResult& suite, Format format);
void write_explore(std::ostream& out, const ExploreReport& report, Format format);

}  // namespace nilorbit
