#pragma once

#include <algorithm>
#include <random>

namespace tri {

template <class Rng>
Distribution random_distribution(const FinSet& carrier, int den, Rng& rng) {
  // Drop den-1 cut points into [0, den] and use the gaps as weights.
  std::uniform_int_distribution<int> pick(0, den);
  std::vector<int> cuts{0, den};
  for (std::size_t i = 1; i < carrier.size(); ++i) cuts.push_back(pick(rng));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rat> weights(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) weights[i] = Rat(cuts[i + 1] - cuts[i], den);
  return Distribution(carrier, weights);
}

}  // namespace tri
