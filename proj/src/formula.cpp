#include "memsat/formula.hpp"

#include <sstream>

namespace memsat {

Formula::Formula(uint32_t num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 3)
    throw FormulaError("formula needs at least 3 variables");
  if (clauses_.empty())
    throw FormulaError("formula needs at least 1 clause");

  for (size_t m = 0; m < clauses_.size(); ++m) {
    const auto& c = clauses_[m];
    for (int i = 0; i < 3; ++i) {
      const Literal& l = c.lits[i];
      if (l.var >= num_vars_)
        throw FormulaError("clause " + std::to_string(m) +
                           ": variable index out of range");
      if (l.sign != 1 && l.sign != -1)
        throw FormulaError("clause " + std::to_string(m) + ": bad sign");
      for (int j = i + 1; j < 3; ++j)
        if (c.lits[j].var == l.var)
          throw FormulaError("clause " + std::to_string(m) +
                             ": repeated variable");
    }
  }

  incidence_.resize(num_vars_);
  for (uint32_t m = 0; m < clauses_.size(); ++m)
    for (uint8_t pos = 0; pos < 3; ++pos)
      incidence_[clauses_[m].lits[pos].var].push_back({m, pos});
}

EvalResult Formula::evaluate(const Assignment& a) const {
  if (a.size() != num_vars_)
    throw FormulaError("assignment length mismatch");
  uint32_t unsat = 0;
  for (const Clause& c : clauses_) {
    bool sat = false;
    for (const Literal& l : c.lits) {
      if ((l.sign > 0) == (a[l.var] != 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) ++unsat;
  }
  return {unsat == 0, unsat};
}

Formula parse_dimacs(std::istream& in) {
  std::string line;
  long n = -1, m = -1;
  std::vector<Clause> clauses;
  std::vector<long> lits;

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      if (n >= 0) throw FormulaError("duplicate DIMACS header");
      std::istringstream hs(line);
      std::string p, cnf;
      hs >> p >> cnf >> n >> m;
      if (hs.fail() || cnf != "cnf" || n < 0 || m < 0)
        throw FormulaError("malformed DIMACS header: " + line);
      continue;
    }
    if (n < 0) throw FormulaError("clause before DIMACS header");
    std::istringstream ls(line);
    long v;
    while (ls >> v) {
      if (v == 0) {
        if (lits.size() != 3)
          throw FormulaError("clause arity != 3 (got " +
                             std::to_string(lits.size()) + ")");
        Clause c{};
        for (int i = 0; i < 3; ++i) {
          long k = lits[i];
          long var = (k > 0 ? k : -k) - 1;
          if (var >= n)
            throw FormulaError("variable index out of range: " +
                               std::to_string(k));
          c.lits[i] = {static_cast<uint32_t>(var),
                       static_cast<int8_t>(k > 0 ? 1 : -1)};
        }
        clauses.push_back(c);
        lits.clear();
      } else {
        lits.push_back(v);
      }
    }
  }
  if (n < 0) throw FormulaError("missing DIMACS header");
  if (!lits.empty()) throw FormulaError("unterminated clause");
  if (static_cast<long>(clauses.size()) != m)
    throw FormulaError("clause count mismatch with header: expected " +
                       std::to_string(m) + ", got " +
                       std::to_string(clauses.size()));
  return Formula(static_cast<uint32_t>(n), std::move(clauses));
}

Formula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

void emit_dimacs(const Formula& f, std::ostream& out) {
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const Clause& c : f.clauses()) {
    for (const Literal& l : c.lits)
      out << static_cast<long>(l.sign) * (static_cast<long>(l.var) + 1) << ' ';
    out << "0\n";
  }
}

std::string emit_dimacs(const Formula& f) {
  std::ostringstream out;
  emit_dimacs(f, out);
  return out.str();
}

}  // namespace memsat
