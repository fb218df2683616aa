#pragma once

#include "hintgen/domain.hpp"

namespace hintgen {

struct ValidationOutcome {
  int n1 = 0;  // suite-passing repairs from the standard prompt
  int n2 = 0;  // suite-passing repairs from the augmented prompt
  int n = 0;   // samples per prompt
  bool accepted = false;
  RuleVariant rule_variant = RuleVariant::full;
};

// Threshold rule over repair counts, evaluated in exact rational arithmetic.
//   full:          (n2/n >= n1/n) and ((n2/n >= alpha) or (n2/n >= n1/n + beta))
//   absolute_only: n2/n >= alpha
//   no_beta:       (n2/n >= n1/n) and (n2/n >= alpha)
//   relative_only: n2/n >= n1/n
// Throws std::invalid_argument unless 0 <= n1, n2 <= n and n >= 1.
bool decide(int n1, int n2, int n, Rational alpha, Rational beta, RuleVariant variant);

}  // namespace hintgen
