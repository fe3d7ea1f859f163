#pragma once

// A small CDCL SAT solver (two watched literals, first-UIP learning, activity
// ordering) for the bounded countermodel oracle.

#include <cstddef>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

namespace elhgeo::testing {

/// Literal encoding: 2·var for the positive literal, 2·var + 1 for its
/// negation.
using Lit = int;
inline Lit pos(int var) { return 2 * var; }
inline Lit neg(int var) { return 2 * var + 1; }
inline Lit negate(Lit l) { return l ^ 1; }

class Cdcl {
 public:
  int new_var();
  int var_count() const { return static_cast<int>(assign_.size()); }

  /// Clauses may only be added before solve().
  void add_clause(std::vector<Lit> clause);

  bool solve();
  /// Value of `var` in the model found by the last successful solve().
  bool value(int var) const { return assign_[static_cast<std::size_t>(var)] == 1; }

  std::size_t conflicts() const { return conflicts_; }

 private:
  int lit_value(Lit l) const;  // 1 true, 0 false, -1 unassigned
  void enqueue(Lit l, int reason);
  int propagate();
  void analyze(int conflict, std::vector<Lit>& learnt, int& back_level);
  void backtrack(int level);
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }
  void bump(int var);
  void attach(int clause);

  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<int>> watches_;  // per literal: clauses watching it
  std::vector<std::int8_t> assign_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<double> activity_;
  std::vector<char> seen_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  // Lazy max-heap of (activity, var); stale entries are skipped on pop.
  std::priority_queue<std::pair<double, int>> order_;
  std::size_t qhead_ = 0;
  double inc_ = 1.0;
  bool unsat_ = false;
  std::size_t conflicts_ = 0;
};

}  // namespace elhgeo::testing
