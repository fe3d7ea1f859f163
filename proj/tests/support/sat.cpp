#include "sat.hpp"

#include <algorithm>

namespace elhgeo::testing {
namespace {

int var_of(Lit l) { return l >> 1; }

}  // namespace

int Cdcl::new_var() {
  const int v = var_count();
  assign_.push_back(-1);
  level_.push_back(0);
  reason_.push_back(-1);
  activity_.push_back(0.0);
  seen_.push_back(0);
  watches_.emplace_back();
  watches_.emplace_back();
  order_.emplace(0.0, v);
  return v;
}

int Cdcl::lit_value(Lit l) const {
  const int a = assign_[static_cast<std::size_t>(var_of(l))];
  return a < 0 ? -1 : (a ^ (l & 1));
}

void Cdcl::enqueue(Lit l, int reason) {
  const auto v = static_cast<std::size_t>(var_of(l));
  assign_[v] = static_cast<std::int8_t>((l & 1) ? 0 : 1);
  level_[v] = decision_level();
  reason_[v] = reason;
  trail_.push_back(l);
}

void Cdcl::attach(int clause) {
  const auto& c = clauses_[static_cast<std::size_t>(clause)];
  watches_[static_cast<std::size_t>(c[0])].push_back(clause);
  watches_[static_cast<std::size_t>(c[1])].push_back(clause);
}

void Cdcl::add_clause(std::vector<Lit> clause) {
  if (unsat_) return;
  std::sort(clause.begin(), clause.end());
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  std::vector<Lit> kept;
  for (std::size_t k = 0; k < clause.size(); ++k) {
    if (k + 1 < clause.size() && clause[k + 1] == negate(clause[k]))
      return;  // tautology
    const int val = lit_value(clause[k]);
    if (val == 1) return;
    if (val == -1) kept.push_back(clause[k]);
  }
  if (kept.empty()) {
    unsat_ = true;
  } else if (kept.size() == 1) {
    enqueue(kept[0], -1);
    if (propagate() >= 0) unsat_ = true;
  } else {
    clauses_.push_back(std::move(kept));
    attach(static_cast<int>(clauses_.size()) - 1);
  }
}

int Cdcl::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit falsified = negate(trail_[qhead_++]);
    auto& ws = watches_[static_cast<std::size_t>(falsified)];
    std::size_t i = 0, j = 0;
    while (i < ws.size()) {
      const int ci = ws[i++];
      auto& c = clauses_[static_cast<std::size_t>(ci)];
      if (c[0] == falsified) std::swap(c[0], c[1]);
      if (lit_value(c[0]) == 1) {
        ws[j++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k)
        if (lit_value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[static_cast<std::size_t>(c[1])].push_back(ci);
          moved = true;
          break;
        }
      if (moved) continue;
      ws[j++] = ci;
      if (lit_value(c[0]) == 0) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return ci;
      }
      enqueue(c[0], ci);
    }
    ws.resize(j);
  }
  return -1;
}

void Cdcl::bump(int var) {
  auto& a = activity_[static_cast<std::size_t>(var)];
  a += inc_;
  if (a > 1e100) {
    for (auto& x : activity_) x *= 1e-100;
    inc_ *= 1e-100;
    order_ = {};
    for (int u = 0; u < var_count(); ++u)
      order_.emplace(activity_[static_cast<std::size_t>(u)], u);
    return;
  }
  order_.emplace(a, var);
}

void Cdcl::analyze(int conflict, std::vector<Lit>& learnt, int& back_level) {
  learnt.assign(1, 0);
  int pending = 0;
  Lit p = -1;
  std::size_t idx = trail_.size();
  do {
    const auto& c = clauses_[static_cast<std::size_t>(conflict)];
    for (std::size_t k = (p == -1 ? 0 : 1); k < c.size(); ++k) {
      const int v = var_of(c[k]);
      const auto vs = static_cast<std::size_t>(v);
      if (seen_[vs] || level_[vs] == 0) continue;
      seen_[vs] = 1;
      bump(v);
      if (level_[vs] == decision_level())
        ++pending;
      else
        learnt.push_back(c[k]);
    }
    while (!seen_[static_cast<std::size_t>(var_of(trail_[--idx]))]) {
    }
    p = trail_[idx];
    conflict = reason_[static_cast<std::size_t>(var_of(p))];
    seen_[static_cast<std::size_t>(var_of(p))] = 0;
    --pending;
  } while (pending > 0);
  learnt[0] = negate(p);

  back_level = 0;
  std::size_t at = 1;
  for (std::size_t k = 1; k < learnt.size(); ++k) {
    const int lv = level_[static_cast<std::size_t>(var_of(learnt[k]))];
    if (lv > back_level) {
      back_level = lv;
      at = k;
    }
  }
  if (learnt.size() > 1) std::swap(learnt[1], learnt[at]);
  for (const Lit l : learnt) seen_[static_cast<std::size_t>(var_of(l))] = 0;
}

void Cdcl::backtrack(int level) {
  if (decision_level() <= level) return;
  const std::size_t keep = trail_lim_[static_cast<std::size_t>(level)];
  for (std::size_t k = keep; k < trail_.size(); ++k) {
    const auto v = static_cast<std::size_t>(var_of(trail_[k]));
    assign_[v] = -1;
    reason_[v] = -1;
    order_.emplace(activity_[v], static_cast<int>(v));
  }
  trail_.resize(keep);
  trail_lim_.resize(static_cast<std::size_t>(level));
  qhead_ = keep;
}

bool Cdcl::solve() {
  if (unsat_) return false;
  std::vector<Lit> learnt;
  for (;;) {
    const int conflict = propagate();
    if (conflict >= 0) {
      ++conflicts_;
      if (decision_level() == 0) {
        unsat_ = true;
        return false;
      }
      int back_level = 0;
      analyze(conflict, learnt, back_level);
      backtrack(back_level);
      if (learnt.size() == 1) {
        enqueue(learnt[0], -1);
      } else {
        clauses_.push_back(learnt);
        const int ci = static_cast<int>(clauses_.size()) - 1;
        attach(ci);
        enqueue(learnt[0], ci);
      }
      inc_ /= 0.95;
      continue;
    }
    int best = -1;
    while (!order_.empty()) {
      const auto [act, v] = order_.top();
      order_.pop();
      const auto vs = static_cast<std::size_t>(v);
      if (assign_[vs] < 0 && act == activity_[vs]) {
        best = v;
        break;
      }
    }
    if (best < 0) {
      // Every unassigned variable keeps a current entry, so an empty heap
      // means a complete assignment; the scan is a cheap safeguard.
      for (int v = 0; v < var_count(); ++v)
        if (assign_[static_cast<std::size_t>(v)] < 0) best = v;
      if (best < 0) return true;
    }
    trail_lim_.push_back(trail_.size());
    enqueue(neg(best), -1);
  }
}

}  // namespace elhgeo::testing
