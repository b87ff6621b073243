#include "sampling.hpp"

namespace e2z {

Mat2 random_unimodular(Lcg& rng, int max_entry) {
  // plain rejection: ~1.5% of bounded 4-tuples are unimodular, cheap enough
  for (;;) {
    Mat2 g{rng.range(-max_entry, max_entry), rng.range(-max_entry, max_entry),
           rng.range(-max_entry, max_entry), rng.range(-max_entry, max_entry)};
    if (g.det() == 1) return g;
  }
}

cplx random_domain_point(Lcg& rng, double y_min, double y_max) {
  return {rng.uniform(-0.5, 0.5), rng.uniform(y_min, y_max)};
}

}  // namespace e2z
