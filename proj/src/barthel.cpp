#include "memsat/barthel.hpp"

#include <cmath>
#include <stdexcept>

#include "memsat/rng.hpp"

namespace memsat {

TypeProbs default_type_probs() { return {0.0, 1.0 / 6.0, 1.0 / 6.0, 0.0}; }

uint32_t clause_count(uint32_t num_vars, double ratio) {
  return static_cast<uint32_t>(std::floor(ratio * num_vars + 0.5));
}

namespace {

// position subsets of {0,1,2} with exactly t bits set, by ascending bitmask
constexpr uint8_t kPatterns[4][3] = {
    {0, 0, 0},  // t=0
    {1, 2, 4},  // t=1
    {3, 5, 6},  // t=2
    {7, 0, 0},  // t=3
};
constexpr int kPatternCount[4] = {1, 3, 3, 1};

void validate(const GeneratorConfig& cfg) {
  if (cfg.num_vars < 3)
    throw std::invalid_argument("generator: need at least 3 variables");
  const TypeProbs& p = cfg.type_probs;
  const double probs[4] = {p.p0, p.p1, p.p2, p.p3};
  for (double q : probs)
    if (!(q >= 0.0))
      throw std::invalid_argument("generator: negative type probability");
  if (p.p0 != 0.0)
    throw std::invalid_argument("generator: p0 must be 0");
  if (std::abs(3 * p.p1 + 3 * p.p2 + p.p3 - 1.0) > 1e-9)
    throw std::invalid_argument("generator: type probabilities not normalized");
  if (std::abs(3 * p.p1 + 6 * p.p2 + 3 * p.p3 - 1.5) > 1e-9)
    throw std::invalid_argument("generator: type probabilities violate zero bias");
}

}  // namespace

PlantedInstance generate(const GeneratorConfig& cfg) {
  validate(cfg);
  const uint32_t n = cfg.num_vars;
  const uint32_t m = clause_count(n, cfg.ratio);
  if (m == 0) throw std::invalid_argument("generator: ratio yields no clauses");

  SplitMix64 rng(cfg.seed);

  Assignment planted(n);
  for (uint32_t i = 0; i < n; ++i)
    planted[i] = static_cast<uint8_t>(rng.next_below(2));

  const TypeProbs& p = cfg.type_probs;
  const double class_weight[4] = {p.p0, 3 * p.p1, 3 * p.p2, p.p3};

  std::vector<Clause> clauses;
  clauses.reserve(m);
  for (uint32_t ci = 0; ci < m; ++ci) {
    uint32_t vars[3];
    vars[0] = static_cast<uint32_t>(rng.next_below(n));
    do {
      vars[1] = static_cast<uint32_t>(rng.next_below(n));
    } while (vars[1] == vars[0]);
    do {
      vars[2] = static_cast<uint32_t>(rng.next_below(n));
    } while (vars[2] == vars[0] || vars[2] == vars[1]);

    double u = rng.next_unit();
    int t = 3;
    for (int k = 0; k < 3; ++k) {
      if (u < class_weight[k]) {
        t = k;
        break;
      }
      u -= class_weight[k];
    }
    uint8_t mask =
        kPatterns[t][rng.next_below(static_cast<uint64_t>(kPatternCount[t]))];

    Clause c{};
    for (int i = 0; i < 3; ++i) {
      bool satisfied = (mask >> i) & 1;
      bool value = planted[vars[i]] != 0;
      // literal satisfied under planted iff sign matches the planted value
      int8_t sign = (satisfied == value) ? int8_t{1} : int8_t{-1};
      c.lits[i] = {vars[i], sign};
    }
    clauses.push_back(c);
  }

  return {Formula(n, std::move(clauses)), std::move(planted), cfg.seed};
}

}  // namespace memsat
