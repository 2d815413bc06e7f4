#include "nilorbit/report.hpp"

#include <iomanip>
#include <sstream>

#include "nilorbit/error.hpp"

namespace nilorbit {

namespace {

using nlohmann::json;

std::string optional_text(const std::optional<Integer>& value) {
  return value ? to_string(*value) : std::string("-");
}

std::string optional_text(const std::optional<std::uint64_t>& value) {
  return value ? std::to_string(*value) : std::string("-");
}

json optional_json(const std::optional<std::uint64_t>& value) {
  return value ? json(*value) : json(nullptr);
}

json optional_json(const std::optional<Integer>& value) {
  return value ? integer_json(*value) : json(nullptr);
}

json integers_json(const std::vector<Integer>& values) {
  json out = json::array();
  for (const Integer& v : values) out.push_back(integer_json(v));
  return out;
}

json primes_json(const PrimeSet& primes) { return integers_json(primes.values()); }

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + to_string(values[i]);
  return out;
}

std::string_view certainty_name(Certainty c) {
  return c == Certainty::Proved ? "Proved" : "Inconclusive";
}

json status_json(const OrbitStatus& status) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HitsZero>) {
          return {{"kind", "HitsZero"}, {"index", s.index}};
        } else if constexpr (std::is_same_v<T, EntersCycle>) {
          return {{"kind", "EntersCycle"},
                  {"preperiod", s.preperiod},
                  {"period", s.period},
                  {"cycle", integers_json(s.cycle)}};
        } else if constexpr (std::is_same_v<T, Escapes>) {
          return {{"kind", "Escapes"}, {"step", s.step}, {"escape_bound", integer_json(s.escape_bound)}};
        } else {
          return {{"kind", "Exhausted"}, {"max_steps", s.max_steps}};
        }
      },
      status);
}

std::string status_text(const OrbitStatus& status) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HitsZero>) {
          return "HitsZero{" + std::to_string(s.index) + "}";
        } else if constexpr (std::is_same_v<T, EntersCycle>) {
          return "EntersCycle{preperiod=" + std::to_string(s.preperiod) +
                 ", period=" + std::to_string(s.period) + ", cycle=[" + join(s.cycle) + "]}";
        } else if constexpr (std::is_same_v<T, Escapes>) {
          return "Escapes{step=" + std::to_string(s.step) + ", bound=" + to_string(s.escape_bound) + "}";
        } else {
          return "Exhausted{" + std::to_string(s.max_steps) + "}";
        }
      },
      status);
}

std::string scan_outcome_text(const ScanReport& report) {
  if (report.witness_found()) return "WitnessFound{" + std::to_string(*report.first_witness()) + "}";
  return "AllFoundUpToBound{" + std::to_string(report.bound) + "}";
}

json document(std::string_view kind) {
  return {{"schema", kSchemaVersion}, {"kind", kind}};
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

// Quotes a CSV field when it contains a separator or a quote.
std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string excluded_text(const PrimeSet& excluded) {
  return excluded.empty() ? std::string("{}") : "{" + join(excluded.values()) + "}";
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  throw Error(ErrorCode::Parse, "unknown output format '" + std::string(text) + "'");
}

json integer_json(const Integer& value) {
  if (auto small = to_int64(value)) return *small;
  return to_string(value);
}

json orbit_json(const Polynomial& u, const Integer& r, const OrbitOutcome& outcome) {
  json doc = document("orbit");
  doc["polynomial"] = to_text(u);
  doc["r"] = integer_json(r);
  doc["trajectory"] = integers_json(outcome.trajectory);
  doc["outcome"] = status_json(outcome.status);
  return doc;
}

json modp_json(const Polynomial& u, const Integer& r, const ModPResult& result,
               std::span<const std::uint64_t> trajectory) {
  json doc = document("mp");
  doc["polynomial"] = to_text(u);
  doc["r"] = integer_json(r);
  doc["p"] = result.p;
  doc["m_p"] = optional_json(result.m_p);
  doc["preperiod"] = result.preperiod;
  doc["period"] = result.period;
  if (!trajectory.empty()) doc["trajectory"] = json(std::vector<std::uint64_t>(trajectory.begin(), trajectory.end()));
  return doc;
}

json scan_json(const ScanReport& report) {
  json doc = document("scan");
  doc["polynomial"] = to_text(report.polynomial);
  doc["r"] = integer_json(report.r);
  doc["excluded"] = primes_json(report.excluded);
  doc["bound"] = report.bound;
  doc["outcome"] = report.witness_found()
                       ? json{{"kind", "WitnessFound"}, {"witness", *report.first_witness()}}
                       : json{{"kind", "AllFoundUpToBound"}};
  doc["certainty"] = certainty_name(report.certainty());
  json rows = json::array();
  for (const ModPResult& r : report.results) {
    rows.push_back({{"p", r.p}, {"m_p", optional_json(r.m_p)}, {"preperiod", r.preperiod}, {"period", r.period}});
  }
  doc["results"] = std::move(rows);
  return doc;
}

json classification_json(const Classification& c) {
  json doc = document("classification");
  doc["verdict"] = verdict_name(c.verdict);
  doc["index"] = optional_json(c.index);
  doc["witness"] = optional_json(c.witness);
  doc["provenance"] = c.provenance;
  doc["certainty"] = certainty_name(c.certainty);
  doc["polynomial"] = to_text(c.query.polynomial);
  doc["r"] = integer_json(c.query.r);
  doc["excluded"] = primes_json(c.query.excluded);
  if (c.scan) {
    doc["scan"] = {{"bound", c.scan->bound},
                   {"primes_scanned", c.scan->results.size()},
                   {"witness", optional_json(c.scan->first_witness())}};
  }
  return doc;
}

json validation_json(const ValidationReport& report) {
  const CoefficientBox& box = report.box;
  json doc = document("validation");
  doc["box"] = {{"min_degree", box.min_degree},
                {"max_degree", box.max_degree},
                {"min_coefficient", box.min_coefficient},
                {"max_coefficient", box.max_coefficient},
                {"r", integer_json(box.r)},
                {"excluded", primes_json(box.excluded)},
                {"prime_bound", box.prime_bound}};
  json counts = json::object();
  for (const auto& [verdict, count] : report.counts) counts[std::string(verdict_name(verdict))] = count;
  doc["polynomials"] = report.entries.size();
  doc["counts"] = std::move(counts);
  json contradictions = json::array();
  for (const Contradiction& c : report.contradictions) {
    contradictions.push_back({{"polynomial", to_text(c.polynomial)},
                              {"verdict", verdict_name(c.classification.verdict)},
                              {"scan_witness", optional_json(c.scan_witness)},
                              {"reason", c.reason}});
  }
  doc["contradictions"] = std::move(contradictions);
  json inconclusives = json::array();
  for (std::size_t i : report.inconclusives) {
    inconclusives.push_back(to_text(report.entries[i].classification.query.polynomial));
  }
  doc["inconclusives"] = std::move(inconclusives);
  doc["passed"] = report.passed();
  return doc;
}

json suite_json(const SuiteResult& suite) {
  json doc = document("suite");
  doc["suite"] = suite.name;
  doc["passed"] = suite.passed;
  doc["failures"] = suite.failures;
  doc["notes"] = suite.notes;
  json reports = json::array();
  for (const ValidationReport& r : suite.reports) {
    json entry = validation_json(r);
    entry.erase("schema");
    reports.push_back(std::move(entry));
  }
  doc["reports"] = std::move(reports);
  return doc;
}

json explore_json(const ExploreReport& report) {
  json doc = document("explore");
  doc["polynomial"] = to_text(report.polynomial);
  doc["range"] = report.range;
  doc["prime_bound"] = report.prime_bound;
  doc["nilpotent_points"] = integers_json(report.nilpotent_points);
  doc["locally_nilpotent_points"] = integers_json(report.locally_nilpotent_points);
  json entries = json::array();
  for (const ExploreEntry& e : report.entries) {
    entries.push_back({{"r", integer_json(e.r)},
                       {"index", optional_json(e.nilpotency_index)},
                       {"verdict", verdict_name(e.classification.verdict)},
                       {"provenance", e.classification.provenance},
                       {"certainty", certainty_name(e.classification.certainty)},
                       {"witness", optional_json(e.classification.witness)}});
  }
  doc["entries"] = std::move(entries);
  doc["note"] = "finite window only; no claim about the full sets";
  return doc;
}

void write_orbit(std::ostream& out, const Polynomial& u, const Integer& r, const OrbitOutcome& outcome,
                 Format format) {
  switch (format) {
    case Format::Json:
      emit(out, orbit_json(u, r, outcome));
      return;
    case Format::Csv:
      out << "n,value\n";
      for (std::size_t i = 0; i < outcome.trajectory.size(); ++i) {
        out << i + 1 << ',' << outcome.trajectory[i] << '\n';
      }
      return;
    case Format::Text:
      out << "u = " << to_display(u) << ", r = " << r << '\n';
      out << "trajectory: " << join(outcome.trajectory) << '\n';
      out << "outcome: " << status_text(outcome.status) << '\n';
      return;
  }
}

void write_modp(std::ostream& out, const Polynomial& u, const Integer& r, const ModPResult& result,
                Format format, std::span<const std::uint64_t> trajectory) {
  switch (format) {
    case Format::Json:
      emit(out, modp_json(u, r, result, trajectory));
      return;
    case Format::Csv:
      out << "p,m_p,preperiod,period\n";
      out << result.p << ',' << optional_text(result.m_p) << ',' << result.preperiod << ','
          << result.period << '\n';
      return;
    case Format::Text:
      out << "u = " << to_display(u) << ", r = " << r << ", p = " << result.p << '\n';
      if (!trajectory.empty()) {
        out << "trajectory mod p:";
        for (std::uint64_t x : trajectory) out << ' ' << x;
        out << '\n';
      }
      out << "m_p = " << optional_text(result.m_p) << ", preperiod = " << result.preperiod
          << ", period = " << result.period << '\n';
      return;
  }
}

void write_scan(std::ostream& out, const ScanReport& report, Format format) {
  switch (format) {
    case Format::Json:
      emit(out, scan_json(report));
      return;
    case Format::Csv:
      out << "p,m_p,preperiod,period\n";
      for (const ModPResult& r : report.results) {
        out << r.p << ',' << optional_text(r.m_p) << ',' << r.preperiod << ',' << r.period << '\n';
      }
      return;
    case Format::Text:
      out << "u = " << to_display(report.polynomial) << ", r = " << report.r
          << ", A = " << excluded_text(report.excluded) << ", primes <= " << report.bound << '\n';
      out << std::setw(10) << "p" << std::setw(10) << "m_p" << std::setw(10) << "preperiod"
          << std::setw(10) << "period" << '\n';
      for (const ModPResult& r : report.results) {
        out << std::setw(10) << r.p << std::setw(10) << optional_text(r.m_p) << std::setw(10)
            << r.preperiod << std::setw(10) << r.period << '\n';
      }
      out << "outcome: " << scan_outcome_text(report) << " (" << certainty_name(report.certainty()) << ")\n";
      return;
  }
}

void write_classification(std::ostream& out, const Classification& c, Format format) {
  switch (format) {
    case Format::Json:
      emit(out, classification_json(c));
      return;
    case Format::Csv:
      out << "polynomial,r,excluded,verdict,index,witness,provenance,certainty\n";
      out << csv_field(to_text(c.query.polynomial)) << ',' << c.query.r << ','
          << csv_field(join(c.query.excluded.values())) << ',' << verdict_name(c.verdict) << ','
          << optional_text(c.index) << ',' << optional_text(c.witness) << ',' << csv_field(c.provenance)
          << ',' << certainty_name(c.certainty) << '\n';
      return;
    case Format::Text:
      out << "u = " << to_display(c.query.polynomial) << ", r = " << c.query.r
          << ", A = " << excluded_text(c.query.excluded) << '\n';
      out << "verdict: " << verdict_name(c.verdict);
      if (c.index) out << " (index " << *c.index << ")";
      out << '\n';
      if (c.witness) out << "witness prime: " << *c.witness << '\n';
      out << "provenance: " << c.provenance << '\n';
      out << "certainty: " << certainty_name(c.certainty) << '\n';
      if (c.scan) out << "scan: " << scan_outcome_text(*c.scan) << '\n';
      return;
  }
}

void write_suite(std::ostream& out, const SuiteResult& suite, Format format) {
  switch (format) {
    case Format::Json:
      emit(out, suite_json(suite));
      return;
    case Format::Csv:
      out << "suite,r,excluded,polynomials,contradictions,inconclusives,passed\n";
      for (const ValidationReport& r : suite.reports) {
        out << suite.name << ',' << r.box.r << ',' << csv_field(join(r.box.excluded.values())) << ','
            << r.entries.size() << ',' << r.contradictions.size() << ',' << r.inconclusives.size()
            << ',' << (r.passed() ? "true" : "false") << '\n';
      }
      return;
    case Format::Text:
      out << "suite " << suite.name << ": " << (suite.passed ? "PASS" : "FAIL") << '\n';
      for (const ValidationReport& r : suite.reports) {
        out << "  r=" << r.box.r << " A=" << excluded_text(r.box.excluded) << ": " << r.entries.size()
            << " polynomials,";
        for (const auto& [verdict, count] : r.counts) out << ' ' << verdict_name(verdict) << '=' << count;
        out << ", contradictions=" << r.contradictions.size() << ", inconclusive=" << r.inconclusives.size()
            << ", " << std::fixed << std::setprecision(2) << r.elapsed_seconds << "s\n";
      }
      for (const std::string& note : suite.notes) out << "  note: " << note << '\n';
      for (const std::string& failure : suite.failures) out << "  FAIL: " << failure << '\n';
      return;
  }
}

void write_explore(std::ostream& out, const ExploreReport& report, Format format) {
  switch (format) {
    case Format::Json:
      emit(out, explore_json(report));
      return;
    case Format::Csv:
      out << "r,index,verdict,provenance,certainty\n";
      for (const ExploreEntry& e : report.entries) {
        out << e.r << ',' << optional_text(e.nilpotency_index) << ',' << verdict_name(e.classification.verdict)
            << ',' << csv_field(e.classification.provenance) << ','
            << certainty_name(e.classification.certainty) << '\n';
      }
      return;
    case Format::Text:
      out << "u = " << to_display(report.polynomial) << ", r in [-" << report.range << ", " << report.range
          << "]\n";
      out << "N(u) window: {" << join(report.nilpotent_points) << "}\n";
      out << "LN(u) window: {" << join(report.locally_nilpotent_points) << "}\n";
      for (const ExploreEntry& e : report.entries) {
        out << std::setw(6) << e.r << "  " << verdict_name(e.classification.verdict);
        if (e.nilpotency_index) out << " (index " << *e.nilpotency_index << ")";
        out << "  " << e.classification.provenance << '\n';
      }
      return;
  }
}

}  // namespace nilorbit
