#pragma once

#include <cstdint>

#include "memsat/formula.hpp"

namespace memsat {

// Probability of each clause class, indexed by the number of literals the
// planted assignment satisfies. Classes with t satisfied literals contain
// C(3,t) sign patterns, so the class weights are C(3,t)*p_t.
struct TypeProbs {
  double p0;
  double p1;
  double p2;
  double p3;
};

// (0, 1/6, 1/6, 0): the unique choice with p0 = p3 = 0 and p1 = p2 that
// normalizes (3*p1 + 3*p2 + p3 = 1) and keeps the planted assignment
// invisible to literal-polarity statistics (3*p1 + 6*p2 + 3*p3 = 3/2).
TypeProbs default_type_probs();

struct GeneratorConfig {
  uint32_t num_vars = 0;
  double ratio = 4.3;
  uint64_t seed = 0;
  TypeProbs type_probs = default_type_probs();
};

struct PlantedInstance {
  Formula formula;
  Assignment planted;
  uint64_t seed;
};

// Number of clauses for a given size and ratio: round(ratio*N), half up.
uint32_t clause_count(uint32_t num_vars, double ratio);

// Random planted-solution instance. Deterministic in cfg.seed: the planted
// assignment, variable triples, and sign patterns are all drawn from one
// SplitMix64 stream in a fixed order.
PlantedInstance generate(const GeneratorConfig& cfg);

}  // namespace memsat
