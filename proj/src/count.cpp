#include "sigstack/count.hpp"

namespace sigstack {

Count factorial(unsigned n) {
  Count r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Count catalan(unsigned n) {
  // C_{i+1} = C_i * 2(2i+1) / (i+2), exact at every step.
  Count c = 1;
  for (unsigned i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace sigstack
