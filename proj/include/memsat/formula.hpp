#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace memsat {

struct FormulaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A literal is a 0-based variable index plus a polarity in {+1, -1}.
struct Literal {
  uint32_t var;
  int8_t sign;

  bool operator==(const Literal&) const = default;
};

struct Clause {
  std::array<Literal, 3> lits;

  bool operator==(const Clause&) const = default;
};

// Boolean assignment, one byte per variable (0 = false, 1 = true).
using Assignment = std::vector<uint8_t>;

struct EvalResult {
  bool satisfied;
  uint32_t unsat_count;
};

// (clause index, position of the variable within that clause)
struct IncidenceEntry {
  uint32_t clause;
  uint8_t pos;

  bool operator==(const IncidenceEntry&) const = default;
};

// Immutable 3-CNF formula with a precomputed variable->clause incidence map.
// Safe to share across concurrent solver runs.
class Formula {
 public:
  Formula(uint32_t num_vars, std::vector<Clause> clauses);

  uint32_t num_vars() const { return num_vars_; }
  uint32_t num_clauses() const { return static_cast<uint32_t>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(uint32_t m) const { return clauses_[m]; }
  const std::vector<IncidenceEntry>& incidence(uint32_t var) const {
    return incidence_[var];
  }

  EvalResult evaluate(const Assignment& a) const;

  bool operator==(const Formula& o) const {
    return num_vars_ == o.num_vars_ && clauses_ == o.clauses_;
  }

 private:
  uint32_t num_vars_;
  std::vector<Clause> clauses_;
  std::vector<std::vector<IncidenceEntry>> incidence_;
};

Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(const std::string& text);
void emit_dimacs(const Formula& f, std::ostream& out);
std::string emit_dimacs(const Formula& f);

}  // namespace memsat
