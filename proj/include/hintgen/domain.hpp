#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hintgen/rational.hpp"

namespace hintgen {

struct TestCase {
  std::string case_id;
  std::optional<std::string> stdin_text;
  std::vector<std::string> argv;
  std::string expected_output;
};

struct ComparatorSpec {
  enum class Kind { trimmed_exact, numeric };
  Kind kind = Kind::trimmed_exact;
  double rel_tol = 1e-6;  // numeric kind only
};

struct TestSuite {
  // Declaration order; position defines "first failing".
  std::vector<TestCase> cases;
};

struct ProgrammingTask {
  std::string task_id;
  std::string description;
  TestSuite suite;
  std::vector<std::pair<std::string, std::string>> aux_files;  // relative path -> bytes
  ComparatorSpec comparator;
  std::string language = "python";  // inherited from the corpus at load time
};

enum class ProgramRole { buggy, candidate_fix, selected_fix };

struct SourceProgram {
  std::string program_id;
  std::string task_id;
  std::string source;
  ProgramRole role = ProgramRole::buggy;
};

enum class FailureKind { wrong_output, runtime_error, timeout };

// The triplet shown to the tutor model: failing input, the buggy program's
// actual output, and the expected output.
struct FailingCaseReport {
  TestCase test_case;
  std::string actual_output;
  FailureKind failure_kind = FailureKind::wrong_output;
};

struct FeedbackBundle {
  std::string explanation;
  std::string hint;
  std::string raw_completion;
};

struct ExecLimits {
  std::chrono::milliseconds wall_time_per_test{5000};
  std::uint64_t memory_cap = 512ull << 20;
  bool network_allowed = false;
};

enum class RunMode { base, io, iofix, full };
enum class ValidationPayload { explanation, hint };
enum class RuleVariant { full, absolute_only, no_beta, relative_only };

struct BackendSpec {
  enum class Kind { http_chat, scripted_replay };
  Kind kind = Kind::http_chat;
  std::string endpoint_or_path = "https://api.openai.com/v1/chat/completions";
  std::string model_name;
  std::string auth_env_var = "OPENAI_API_KEY";  // empty = no auth header
};

struct PipelineConfig {
  int n_samples = 10;
  int max_trials_k = 3;
  Rational alpha{1, 2};
  Rational beta{1, 4};
  double gen_temperature = 0.0;
  double sample_temperature = 0.5;
  RunMode mode = RunMode::full;
  ValidationPayload validation_payload = ValidationPayload::explanation;
  RuleVariant rule_variant = RuleVariant::full;
  BackendSpec tutor_backend;
  BackendSpec student_backend;
  std::int64_t seed = 0;
  ExecLimits limits;
  int workers = 4;
  std::string cache_dir;  // replay cache for http backends; empty = no recording

  PipelineConfig() {
    tutor_backend.model_name = "gpt-4-0613";
    student_backend.model_name = "gpt-3.5-turbo-0613";
  }
};

const char* to_string(RunMode mode);
const char* to_string(ValidationPayload payload);
const char* to_string(RuleVariant variant);
const char* to_string(ProgramRole role);
const char* to_string(FailureKind kind);
const char* to_string(BackendSpec::Kind kind);

std::optional<RunMode> run_mode_from_string(const std::string& text);
std::optional<ValidationPayload> payload_from_string(const std::string& text);
std::optional<RuleVariant> rule_variant_from_string(const std::string& text);
std::optional<BackendSpec::Kind> backend_kind_from_string(const std::string& text);

}  // namespace hintgen
