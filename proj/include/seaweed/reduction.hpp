#pragma once

#include "seaweed/core.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seaweed {

enum class Rule {
  swap,
  pad,
  prefix_split,
  symmetrize,
  psi_convert,
  zero_split,
  shrink,
  alpha_step,
  insert,
  half_split,
  terminal
};

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::swap: return "swap";
    case Rule::pad: return "pad";
    case Rule::prefix_split: return "prefix-split";
    case Rule::symmetrize: return "symmetrize";
    case Rule::psi_convert: return "psi-convert";
    case Rule::zero_split: return "zero-split";
    case Rule::shrink: return "shrink";
    case Rule::alpha_step: return "alpha-step";
    case Rule::insert: return "insert";
    case Rule::half_split: return "half-split";
    case Rule::terminal: return "terminal";
  }
  return "?";
}

// What the state value means:
//   C    chi of q^C_n(t | blocks)
//   D    chi of q^D_n(t | blocks), outside Xi_n
//   Psi  Psi of q^A(t | blocks), |blocks| = t
//   A    chi of q^A(t | blocks), |blocks| = t
enum class Mode { C, D, Psi, A };

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::C: return "C";
    case Mode::D: return "D";
    case Mode::Psi: return "Psi";
    case Mode::A: return "A";
  }
  return "?";
}

template <Integer Int = BigInt>
struct ReductionState {
  Mode mode = Mode::C;
  Int n = 0;
  Int t = 0;
  std::vector<Int> blocks;
  Int alpha = 0;

  Int total() const {
    Int s = 0;
    for (const auto& b : blocks) s += b;
    return s;
  }
  Int slack() const { return t - total(); }

  friend bool operator==(const ReductionState& x, const ReductionState& y) {
    return x.mode == y.mode && x.n == y.n && x.t == y.t && x.blocks == y.blocks && x.alpha == y.alpha;
  }
};

template <Integer Int = BigInt>
struct TraceStep {
  Rule rule = Rule::terminal;
  std::size_t i = 0;
  ReductionState<Int> before;
  ReductionState<Int> after;
};

template <Integer Int = BigInt>
struct ReductionTrace {
  std::vector<TraceStep<Int>> steps;
  std::string terminal;
  ReductionState<Int> final_state;
  Int terminal_value = 0;
  Int index = 0;
};

template <Integer Int = BigInt>
struct Reduced {
  Int index = 0;
  ReductionTrace<Int> trace;
};

// d_i = (a_1 + ... + a_{i-1}) - (a_{i+1} + ... + a_k + slack)
template <Integer Int>
std::vector<Int> d_values(const std::vector<Int>& blocks, const Int& slack) {
  Int rest = slack;
  for (const auto& b : blocks) rest += b;
  std::vector<Int> out;
  out.reserve(blocks.size());
  Int before = 0;
  for (const auto& b : blocks) {
    rest -= b;
    out.push_back(before - rest);
    before += b;
  }
  return out;
}

namespace detail {

template <Integer Int>
void erase_block(std::vector<Int>& blocks, std::size_t i) {
  blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i));
}

template <Integer Int>
bool is_terminal(const ReductionState<Int>& s) {
  switch (s.mode) {
    case Mode::C:
    case Mode::D: return 2 * s.total() <= s.t;
    case Mode::Psi: return s.blocks.size() <= 1;
    case Mode::A: return s.blocks.empty();
  }
  return true;
}

template <Integer Int>
Int sum_halves(const std::vector<Int>& blocks) {
  Int s = 0;
  for (const auto& b : blocks) s += half(b);
  return s;
}

template <Integer Int>
std::pair<std::string, Int> terminal_value(const ReductionState<Int>& s) {
  switch (s.mode) {
    case Mode::C: {
      Int v = sum_halves(s.blocks) + half(Int(s.t - 2 * s.total())) + (s.n - s.t);
      return {"parabolic", v};
    }
    case Mode::D: {
      Int v = sum_halves(s.blocks) + half(Int(s.t - 2 * s.total())) + (s.n - s.t);
      int eps = -1;
      if (!is_odd(s.slack())) {
        eps = 0;
      } else if (s.t == s.n) {
        // The arc {t, t+1} closes a segment iff the first block is 1.
        bool segment = s.blocks.empty() ? s.t == 1 : s.blocks.front() == 1;
        if (segment) eps = 1;
      }
      return {"parabolic-eps", v + eps};
    }
    case Mode::Psi: {
      if (s.blocks.empty()) return {"psi", Int(0)};
      const Int& m = s.blocks.front();
      return {"psi", m >= 2 ? Int(m - 2) : m};
    }
    case Mode::A: return {"empty", Int(0)};
  }
  return {"?", Int(0)};
}

template <Integer Int>
void check_outside_xi(const ReductionState<Int>& s) {
  if (s.mode == Mode::D && s.t == s.n && s.n > 1 && s.slack() == 1)
    throw std::logic_error("type D reduction entered Xi_n");
}

}  // namespace detail

// One rewrite: zero split at the smallest i with d_i = 0, else shrink at the
// smallest i with a_i >= |d_i|.
template <Integer Int>
std::optional<TraceStep<Int>> reduce_step(const ReductionState<Int>& state) {
  if (detail::is_terminal(state)) return std::nullopt;
  const Int slack = (state.mode == Mode::C || state.mode == Mode::D) ? state.slack() : Int(0);
  auto d = d_values(state.blocks, slack);
  TraceStep<Int> step;
  step.before = state;
  ReductionState<Int> next = state;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) {
      const Int a = next.blocks[i];
      next.alpha += a;
      next.t -= a;
      next.n -= a;
      detail::erase_block(next.blocks, i);
      step.rule = Rule::zero_split;
      step.i = i + 1;
      step.after = next;
      detail::check_outside_xi(next);
      return step;
    }
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Int gap = abs_value(d[i]);
    if (next.blocks[i] >= gap) {
      const Int r = next.blocks[i] % gap;
      const Int delta = next.blocks[i] - r;
      next.t -= delta;
      next.n -= delta;
      if (r == 0)
        detail::erase_block(next.blocks, i);
      else
        next.blocks[i] = r;
      step.rule = Rule::shrink;
      step.i = i + 1;
      step.after = next;
      detail::check_outside_xi(next);
      return step;
    }
  }
  return std::nullopt;
}

template <Integer Int>
std::optional<TraceStep<Int>> reduce_step_C(const ReductionState<Int>& state) {
  if (state.mode != Mode::C) throw std::invalid_argument("reduce_step_C needs a type C state");
  return reduce_step(state);
}

// Runs steps to the closed form, appending to the trace.
template <Integer Int>
Int run_reduction(ReductionState<Int> state, ReductionTrace<Int>& trace) {
  while (!detail::is_terminal(state)) {
    auto step = reduce_step(state);
    if (!step) throw std::logic_error("no reduction step applies to a non-terminal state");
    state = step->after;
    trace.steps.push_back(std::move(*step));
  }
  auto [name, value] = detail::terminal_value(state);
  trace.terminal = name;
  trace.terminal_value = value;
  trace.final_state = state;
  trace.index = state.alpha + value;
  TraceStep<Int> last;
  last.rule = Rule::terminal;
  last.before = state;
  last.after = state;
  trace.steps.push_back(std::move(last));
  return trace.index;
}

template <Integer Int>
Reduced<Int> reduce_from(const ReductionState<Int>& state) {
  Reduced<Int> out;
  out.index = run_reduction(state, out.trace);
  return out;
}

namespace detail {

template <Integer Int>
void record(ReductionTrace<Int>& trace, Rule rule, std::size_t i, const ReductionState<Int>& before,
            const ReductionState<Int>& after) {
  trace.steps.push_back({rule, i, before, after});
}

template <Integer Int>
std::vector<Int> reversed_then(const Composition<Int>& a, const Composition<Int>& b) {
  std::vector<Int> out(a.blocks().rbegin(), a.blocks().rend());
  out.insert(out.end(), b.blocks().begin(), b.blocks().end());
  return out;
}

}  // namespace detail

// chi(a | b) = chi(2n | a^{-1}, b), then the slack-free engine.
template <Integer Int>
Reduced<Int> index_A_reduced(const SeaweedSpec<Int>& spec) {
  if (spec.type != Algebra::A) throw SpecError("index_A_reduced needs a type A spec");
  Reduced<Int> out;
  ReductionState<Int> start{Mode::A, spec.n, spec.n, {}, 0};
  start.blocks = spec.top.blocks();
  ReductionState<Int> s{Mode::A, 2 * spec.n, 2 * spec.n, detail::reversed_then(spec.top, spec.bottom), 0};
  detail::record(out.trace, Rule::symmetrize, 0, start, s);
  out.index = run_reduction(s, out.trace);
  return out;
}

// Psi of q^A(t | blocks) by reduction; |blocks| must equal t.
template <Integer Int>
Reduced<Int> psi_parabolic_reduced(const Int& t, const std::vector<Int>& blocks) {
  Int total = 0;
  for (const auto& b : blocks) total += b;
  if (total != t) throw SpecError("Psi reduction needs |blocks| = t");
  return reduce_from(ReductionState<Int>{Mode::Psi, t, t, blocks, 0});
}

// Parabolic form q(t | a) of a B or C spec: common-prefix splits, larger side
// first, rank padding and symmetrization.
template <Integer Int>
ReductionState<Int> to_parabolic_C(const SeaweedSpec<Int>& spec, ReductionTrace<Int>* trace = nullptr) {
  if (spec.type != Algebra::B && spec.type != Algebra::C) throw SpecError("to_parabolic_C needs a type B or C spec");
  Composition<Int> a = spec.top;
  Composition<Int> b = spec.bottom;
  Int n = spec.n;
  Int alpha = 0;
  auto snapshot = [&](Mode mode, const Int& t, std::vector<Int> blocks) {
    return ReductionState<Int>{mode, n, t, std::move(blocks), alpha};
  };
  auto log = [&](Rule rule, const ReductionState<Int>& before, const ReductionState<Int>& after) {
    if (trace) detail::record(*trace, rule, 0, before, after);
  };

  while (true) {
    std::size_t i = 1, j = 1;
    bool found = false;
    while (i <= a.size() && j <= b.size()) {
      if (a.prefix(i) == b.prefix(j)) {
        found = true;
        break;
      }
      if (a.prefix(i) < b.prefix(j))
        ++i;
      else
        ++j;
    }
    if (!found) break;
    auto before = snapshot(Mode::C, a.total(), a.blocks());
    std::vector<Int> ha(a.blocks().begin(), a.blocks().begin() + static_cast<std::ptrdiff_t>(i));
    std::vector<Int> hb(b.blocks().begin(), b.blocks().begin() + static_cast<std::ptrdiff_t>(j));
    const Int cut = a.prefix(i);
    alpha += index_A_reduced(make_spec(Algebra::A, cut, Composition<Int>(ha), Composition<Int>(hb))).index;
    n -= cut;
    a = Composition<Int>(std::vector<Int>(a.blocks().begin() + static_cast<std::ptrdiff_t>(i), a.blocks().end()));
    b = Composition<Int>(std::vector<Int>(b.blocks().begin() + static_cast<std::ptrdiff_t>(j), b.blocks().end()));
    log(Rule::prefix_split, before, snapshot(Mode::C, a.total(), a.blocks()));
  }
  if (a.total() < b.total()) {
    auto before = snapshot(Mode::C, a.total(), a.blocks());
    std::swap(a, b);
    log(Rule::swap, before, snapshot(Mode::C, a.total(), a.blocks()));
  }
  if (n != a.total()) {
    auto before = snapshot(Mode::C, a.total(), a.blocks());
    alpha += n - a.total();
    n = a.total();
    log(Rule::pad, before, snapshot(Mode::C, a.total(), a.blocks()));
  }
  auto before = snapshot(Mode::C, a.total(), a.blocks());
  n = 2 * a.total();
  ReductionState<Int> s{Mode::C, n, n, detail::reversed_then(a, b), alpha};
  log(Rule::symmetrize, before, s);
  return s;
}

template <Integer Int>
Reduced<Int> index_BC_reduced(const SeaweedSpec<Int>& spec) {
  Reduced<Int> out;
  auto s = to_parabolic_C(spec, &out.trace);
  out.index = run_reduction(s, out.trace);
  return out;
}

template <Integer Int>
Reduced<Int> index_D_reduced(const SeaweedSpec<Int>& spec) {
  if (spec.type != Algebra::D) throw SpecError("index_D_reduced needs a type D spec");
  Reduced<Int> out;
  XiMembership xi = xi_membership(spec);
  Composition<Int> a = spec.top;
  Composition<Int> b = spec.bottom;
  ReductionState<Int> start{Mode::D, spec.n, a.total(), a.blocks(), 0};
  if (a.total() < b.total()) {
    std::swap(a, b);
    ReductionState<Int> swapped{Mode::D, spec.n, a.total(), a.blocks(), 0};
    detail::record(out.trace, Rule::swap, 0, start, swapped);
    start = swapped;
  }
  ReductionState<Int> s{Mode::D, spec.n + a.total(), 2 * a.total(), detail::reversed_then(a, b), 0};
  detail::record(out.trace, Rule::symmetrize, 0, start, s);
  if (xi.in_xi) {
    ReductionState<Int> psi{Mode::Psi, s.t, s.t, s.blocks, 0};
    psi.blocks.back() += 1;
    detail::record(out.trace, Rule::psi_convert, 0, s, psi);
    s = psi;
  }
  out.index = run_reduction(s, out.trace);
  return out;
}

template <Integer Int>
Reduced<Int> index_reduced(const SeaweedSpec<Int>& spec) {
  switch (spec.type) {
    case Algebra::A: return index_A_reduced(spec);
    case Algebra::D: return index_D_reduced(spec);
    default: return index_BC_reduced(spec);
  }
}

// Inserts a^{i,j} after a_i when a_{i,j} < 0, before a_j otherwise (1-based, j <= k+1).
template <Integer Int>
ReductionState<Int> insert_block_C(const ReductionState<Int>& state, std::size_t i, std::size_t j) {
  const std::size_t k = state.blocks.size();
  if (i < 1 || i >= j || j > k + 1) throw std::out_of_range("insert_block_C needs 1 <= i < j <= k+1");
  std::vector<Int> ext = state.blocks;
  ext.push_back(state.slack());
  Int head = 0, tail = 0, middle = 0;
  for (std::size_t x = 0; x < i; ++x) head += ext[x];
  for (std::size_t x = j - 1; x <= k; ++x) tail += ext[x];
  for (std::size_t x = i; x + 1 < j; ++x) middle += ext[x];
  const Int aij = head - tail;
  const Int block = middle + abs_value(aij);
  ReductionState<Int> next = state;
  const std::size_t at = aij < 0 ? i : j - 1;
  next.blocks.insert(next.blocks.begin() + static_cast<std::ptrdiff_t>(at), block);
  next.blocks = normalize(next.blocks).blocks();
  next.t += block;
  next.n += block;
  return next;
}

// Inserts a_i + d_i after a_i when d_i < 0, a_i - d_i before a_i otherwise.
template <Integer Int>
ReductionState<Int> insert_twin_C(const ReductionState<Int>& state, std::size_t i) {
  if (i < 1 || i > state.blocks.size()) throw std::out_of_range("insert_twin_C index out of range");
  auto d = d_values(state.blocks, state.slack());
  const Int& a = state.blocks[i - 1];
  const Int& di = d[i - 1];
  if (a < abs_value(di)) throw std::invalid_argument("insert_twin_C needs a_i >= |d_i|");
  ReductionState<Int> next = state;
  const Int block = di < 0 ? Int(a + di) : Int(a - di);
  const std::size_t at = di < 0 ? i : i - 1;
  next.blocks.insert(next.blocks.begin() + static_cast<std::ptrdiff_t>(at), block);
  next.blocks = normalize(next.blocks).blocks();
  next.t += block;
  next.n += block;
  return next;
}

// a_i -> a_i + alpha |d_i| for any alpha keeping the block non-negative.
template <Integer Int>
ReductionState<Int> alpha_step(const ReductionState<Int>& state, std::size_t i, const Int& alpha) {
  if (i < 1 || i > state.blocks.size()) throw std::out_of_range("alpha_step index out of range");
  const Int slack = (state.mode == Mode::C || state.mode == Mode::D) ? state.slack() : Int(0);
  auto d = d_values(state.blocks, slack);
  const Int gap = abs_value(d[i - 1]);
  if (gap == 0) throw std::invalid_argument("alpha_step needs d_i != 0");
  const Int delta = alpha * gap;
  if (state.blocks[i - 1] + delta < 0) throw std::invalid_argument("alpha_step makes a block negative");
  ReductionState<Int> next = state;
  next.blocks[i - 1] += delta;
  next.blocks = normalize(next.blocks).blocks();
  next.t += delta;
  next.n += delta;
  return next;
}

// Splits off a_1..a_i when a_1 + ... + a_i <= slack.
template <Integer Int>
ReductionState<Int> prefix_split_C(const ReductionState<Int>& state, std::size_t i) {
  if (state.mode != Mode::C) throw std::invalid_argument("prefix_split_C needs a type C state");
  if (i < 1 || i > state.blocks.size()) throw std::out_of_range("prefix_split_C index out of range");
  Int head = 0, halves = 0;
  for (std::size_t x = 0; x < i; ++x) {
    head += state.blocks[x];
    halves += half(state.blocks[x]);
  }
  if (head > state.slack()) throw std::invalid_argument("prefix_split_C needs a prefix within the slack");
  ReductionState<Int> next = state;
  next.blocks.erase(next.blocks.begin(), next.blocks.begin() + static_cast<std::ptrdiff_t>(i));
  next.alpha += halves;
  next.t -= 2 * head;
  next.n -= 2 * head;
  return next;
}

template <Integer Int = BigInt>
struct CoreSplit {
  Int alpha = 0;
  std::vector<Int> core;
  Int s = 0;
};

// chi(t | a) = alpha + chi(s + |c| | c) with |c| <= s = t - |a|.
template <Integer Int>
CoreSplit<Int> reduction_core(const ReductionState<Int>& state) {
  if (state.mode != Mode::C) throw std::invalid_argument("reduction_core needs a type C state");
  ReductionState<Int> s = state;
  while (!detail::is_terminal(s)) {
    auto step = reduce_step(s);
    if (!step) throw std::logic_error("no reduction step applies to a non-terminal state");
    s = step->after;
  }
  return {s.alpha - state.alpha, s.blocks, state.slack()};
}

}  // namespace seaweed
