#ifndef RIGIDSPACE_VERIFY_HPP
#define RIGIDSPACE_VERIFY_HPP

// Registry of verifiable claims grouped into suites, and the versioned report
// format ("rigidspace-report/1") the CLI emits.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rigidspace
{

inline constexpr std::string_view kReportSchema = "rigidspace-report/1";

enum class Suite
{
  all,
  section0, // mod-2 scalar structures
  section1, // signed permutation groups, metric groups, Givens
  section2, // factorized-graph automorphisms
  section3, // quotients, realification, quaternion units
};

/// std::invalid_argument for empty or unknown names.
Suite parse_suite(std::string_view name);
std::string to_string(Suite suite);

enum class OutputFormat
{
  text,
  json,
};

struct RunConfig
{
  int max_n = 4;           // double-kind exhaustive bound; simple kind uses max_n + 1
  double tolerance = 1e-9; // continuous checks stated at 1e-9
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::text;
  bool timings = false;    // include runtime_ms in JSON (breaks byte-identical reruns)

  /// std::invalid_argument unless 2 <= max_n <= 5 and tolerance > 0.
  void validate() const;
};

enum class Status
{
  pass,
  fail,
  skipped,
};

std::string to_string(Status status);

using Value = std::variant<bool, std::int64_t, double, std::string>;

struct VerificationReport
{
  std::string claim_id;
  Status status = Status::skipped;
  Value computed;
  Value expected;
  std::string comparator; // how computed is judged against expected
  std::string anchor;     // topic tag, one per claim id
  std::string detail;
  double runtime_ms = 0.0;
};

/// Runs every claim of the suite (claims execute concurrently) and returns the
/// reports sorted by claim_id.
std::vector<VerificationReport> run_suite(Suite suite, const RunConfig &config);

/// 0 iff every report passed or was skipped, else 1.
int exit_code(const std::vector<VerificationReport> &reports);

std::string render_json(const std::vector<VerificationReport> &reports, Suite suite,
                        const RunConfig &config);
/// Same document with an arbitrary scope label in the "suite" slot (e.g. "embed:su-to-so").
std::string render_json(const std::vector<VerificationReport> &reports, std::string_view scope,
                        const RunConfig &config);
std::string render_text(const std::vector<VerificationReport> &reports);

/// Structural check of a JSON report against the rigidspace-report/1 schema;
/// returns the list of violations (empty when valid).
std::vector<std::string> validate_report_json(std::string_view json_text);

} // namespace rigidspace

#endif // RIGIDSPACE_VERIFY_HPP
