#include "hintgen/distance.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace hintgen {

std::size_t token_edit_distance(const TokenSeq& a, const TokenSeq& b) {
  std::size_t lo = 0;
  std::size_t a_hi = a.size();
  std::size_t b_hi = b.size();
  while (lo < a_hi && lo < b_hi && a[lo] == b[lo]) ++lo;
  while (a_hi > lo && b_hi > lo && a[a_hi - 1] == b[b_hi - 1]) {
    --a_hi;
    --b_hi;
  }
  const std::size_t m = a_hi - lo;
  const std::size_t n = b_hi - lo;
  if (m == 0) return n;
  if (n == 0) return m;

  std::vector<std::size_t> prev(n + 1);
  std::vector<std::size_t> curr(n + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= m; ++i) {
    curr[0] = i;
    const Token& ta = a[lo + i - 1];
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t subst = prev[j - 1] + (ta == b[lo + j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, subst});
    }
    std::swap(prev, curr);
  }
  return prev[n];
}

std::optional<SourceProgram> select_fix(
    const SourceProgram& buggy,
    const std::vector<std::pair<SourceProgram, SuiteReport>>& candidates) {
  const TokenSeq buggy_tokens = tokenize(buggy.source);
  std::optional<SourceProgram> best;
  std::size_t best_distance = std::numeric_limits<std::size_t>::max();
  for (const auto& [candidate, report] : candidates) {
    if (!report.all_passed) continue;
    const std::size_t d = token_edit_distance(buggy_tokens, tokenize(candidate.source));
    if (d < best_distance) {
      best_distance = d;
      best = candidate;
      best->role = ProgramRole::selected_fix;
    }
  }
  return best;
}

}  // namespace hintgen
