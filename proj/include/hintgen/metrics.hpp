#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hintgen {

// One evaluator's rubric bits for one released hint. h_informative and
// h_conceal default to 0 whenever h_correct is 0; records violating that are
// rejected at ingestion.
struct Annotation {
  std::string program_id;
  std::string evaluator_id;
  bool h_correct = false;
  bool h_informative = false;
  bool h_conceal = false;
  bool h_comprehensible = false;
  bool e_correct = false;
};

// Minimal slice of a pipeline result needed for scoring.
struct ResultSummary {
  std::string program_id;
  bool accepted = false;
};

struct PrecisionCoverage {
  std::optional<double> precision;  // percent; nullopt when nothing was accepted
  double coverage = 0.0;            // percent
  int total = 0;
  int accepted = 0;
  int good = 0;
};

struct MetricReport {
  std::map<std::string, PrecisionCoverage> per_evaluator;
  std::optional<double> precision_mean;
  std::optional<double> precision_stderr;
  double coverage_mean = 0.0;
  double coverage_stderr = 0.0;
  // Per-attribute Cohen's kappa (keys: h_correct, h_informative, h_conceal,
  // h_comprehensible, e_correct, h_overall). Present only with two evaluators.
  std::map<std::string, double> kappa;
};

bool h_overall(const Annotation& a);

// coverage = 100 * accepted/total; precision = 100 * good/accepted.
// Throws std::invalid_argument when an accepted result lacks an annotation
// from this evaluator.
PrecisionCoverage precision_coverage(const std::vector<ResultSummary>& results,
                                     const std::vector<Annotation>& annotations,
                                     const std::string& evaluator_id);

// (arithmetic mean, sample standard deviation / sqrt(n)); stderr is 0 for a
// single value.
std::pair<double, double> mean_stderr(const std::vector<double>& values);

// Cohen's kappa for two paired binary label vectors. By convention 1.0 when
// both observed and expected agreement are exactly 1.
double cohen_kappa(const std::vector<int>& a, const std::vector<int>& b);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
};

// Pearson chi-square for a 2 x k contingency table given as two rows.
ChiSquareResult chi_square_2xk(const std::vector<long long>& row0,
                               const std::vector<long long>& row1);

// JSONL, one Annotation object per line. Throws on malformed records or
// rubric-invariant violations, naming the offending record.
std::vector<Annotation> load_annotations(const std::filesystem::path& path);

MetricReport build_metric_report(const std::vector<ResultSummary>& results,
                                 const std::vector<Annotation>& annotations);

std::string format_percent(double value);  // one decimal, e.g. "94.7"

}  // namespace hintgen
