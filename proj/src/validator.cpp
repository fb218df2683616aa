#include "hintgen/validator.hpp"

#include <stdexcept>

namespace hintgen {

bool decide(int n1, int n2, int n, Rational alpha, Rational beta, RuleVariant variant) {
  if (n < 1) throw std::invalid_argument("decide: n must be >= 1");
  if (n1 < 0 || n1 > n || n2 < 0 || n2 > n)
    throw std::invalid_argument("decide: counts must lie in [0, n]");

  const bool relative = n2 >= n1;                       // n2/n >= n1/n
  const bool absolute = Rational(n2, n) >= alpha;       // n2/n >= alpha
  const bool margin = Rational(n2 - n1, n) >= beta;     // n2/n >= n1/n + beta

  switch (variant) {
    case RuleVariant::full: return relative && (absolute || margin);
    case RuleVariant::absolute_only: return absolute;
    case RuleVariant::no_beta: return relative && absolute;
    case RuleVariant::relative_only: return relative;
  }
  throw std::invalid_argument("decide: unknown rule variant");
}

}  // namespace hintgen
