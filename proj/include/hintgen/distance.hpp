#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hintgen/judge.hpp"
#include "hintgen/lexer.hpp"

namespace hintgen {

// Levenshtein distance over whole tokens; two tokens match when both kind and
// text are equal.
std::size_t token_edit_distance(const TokenSeq& a, const TokenSeq& b);

// Keeps only candidates whose report passed the whole suite and returns the
// one closest to the buggy program by token edit distance. Ties go to the
// earliest candidate (generation order). nullopt when nothing passes.
std::optional<SourceProgram> select_fix(
    const SourceProgram& buggy,
    const std::vector<std::pair<SourceProgram, SuiteReport>>& candidates);

}  // namespace hintgen
