#include "bottcoh/integer.hpp"

namespace bottcoh {

Integer binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  Integer result = 1;
  for (std::int64_t k = 1; k <= b; ++k) {
    result *= a - b + k;
    result /= k;
  }
  return result;
}

}  // namespace bottcoh
