#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hintgen/domain.hpp"

namespace hintgen {

enum class ExitStatus { ok, nonzero_exit, timeout, spawn_error };

struct ExecutionResult {
  std::string case_id;
  std::string stdout_text;  // UTF-8, invalid bytes replaced
  std::string stderr_text;
  ExitStatus exit_status = ExitStatus::ok;
  std::chrono::milliseconds wall_time{0};
  int raw_exit_code = 0;
};

struct CaseOutcome {
  TestCase test_case;
  ExecutionResult result;
  bool passed = false;
};

struct SuiteReport {
  std::string program_id;
  std::vector<CaseOutcome> per_case;  // suite order
  bool all_passed = false;
};

// Runs one program against one test case in a disposable working directory:
// aux files staged in, stdin piped, stdout/stderr captured, environment
// scrubbed, wall-clock limit enforced by killing the whole process group.
ExecutionResult run_program(const SourceProgram& program, const TestCase& test_case,
                            const ProgrammingTask& task, const ExecLimits& limits);

// Total. trimmed_exact: per-line trailing whitespace and trailing blank lines
// are ignored. numeric: number runs compare within rel_tol, the text between
// them must match exactly.
bool compare_output(std::string_view actual, std::string_view expected,
                    const ComparatorSpec& comparator);

// Every case is executed (no short-circuit); spawn failures count as failed
// cases rather than aborting the suite.
SuiteReport evaluate_suite(const SourceProgram& program, const ProgrammingTask& task,
                           const ExecLimits& limits);

// Earliest failing case, or nullopt iff the report passed everything. The
// actual output is stdout for ordinary wrong answers; for crashes and
// timeouts it is a bounded stderr excerpt.
std::optional<FailingCaseReport> first_failing(const SuiteReport& report);

struct InterpreterInfo {
  std::string command;    // resolved via PATH
  std::string extension;  // program file extension, with dot
  bool apply_python_guard = false;
};

// Interpreter registry keyed by corpus subject language. Returns nullopt for
// unsupported languages (executions then report spawn_error).
std::optional<InterpreterInfo> interpreter_for(const std::string& language);

const char* to_string(ExitStatus status);

}  // namespace hintgen
