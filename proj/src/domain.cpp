#include "hintgen/domain.hpp"

namespace hintgen {

const char* to_string(RunMode mode) {
  switch (mode) {
    case RunMode::base: return "base";
    case RunMode::io: return "io";
    case RunMode::iofix: return "iofix";
    case RunMode::full: return "full";
  }
  return "?";
}

const char* to_string(ValidationPayload payload) {
  switch (payload) {
    case ValidationPayload::explanation: return "explanation";
    case ValidationPayload::hint: return "hint";
  }
  return "?";
}

const char* to_string(RuleVariant variant) {
  switch (variant) {
    case RuleVariant::full: return "full";
    case RuleVariant::absolute_only: return "absolute_only";
    case RuleVariant::no_beta: return "no_beta";
    case RuleVariant::relative_only: return "relative_only";
  }
  return "?";
}

const char* to_string(ProgramRole role) {
  switch (role) {
    case ProgramRole::buggy: return "buggy";
    case ProgramRole::candidate_fix: return "candidate_fix";
    case ProgramRole::selected_fix: return "selected_fix";
  }
  return "?";
}

const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::wrong_output: return "wrong_output";
    case FailureKind::runtime_error: return "runtime_error";
    case FailureKind::timeout: return "timeout";
  }
  return "?";
}

const char* to_string(BackendSpec::Kind kind) {
  switch (kind) {
    case BackendSpec::Kind::http_chat: return "http_chat";
    case BackendSpec::Kind::scripted_replay: return "scripted_replay";
  }
  return "?";
}

std::optional<RunMode> run_mode_from_string(const std::string& text) {
  if (text == "base") return RunMode::base;
  if (text == "io") return RunMode::io;
  if (text == "iofix") return RunMode::iofix;
  if (text == "full") return RunMode::full;
  return std::nullopt;
}

std::optional<ValidationPayload> payload_from_string(const std::string& text) {
  if (text == "explanation") return ValidationPayload::explanation;
  if (text == "hint") return ValidationPayload::hint;
  return std::nullopt;
}

std::optional<RuleVariant> rule_variant_from_string(const std::string& text) {
  if (text == "full") return RuleVariant::full;
  if (text == "absolute_only") return RuleVariant::absolute_only;
  if (text == "no_beta") return RuleVariant::no_beta;
  if (text == "relative_only") return RuleVariant::relative_only;
  return std::nullopt;
}

std::optional<BackendSpec::Kind> backend_kind_from_string(const std::string& text) {
  if (text == "http_chat") return BackendSpec::Kind::http_chat;
  if (text == "scripted_replay") return BackendSpec::Kind::scripted_replay;
  return std::nullopt;
}

}  // namespace hintgen
