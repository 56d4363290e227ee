#pragma once

#include "seaweed/integer.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seaweed {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct CompositionError : Error {
  using Error::Error;
};

struct SpecError : Error {
  using Error::Error;
};

struct BoundError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

enum class Algebra { A, B, C, D };

inline char letter(Algebra type) {
  switch (type) {
    case Algebra::A: return 'A';
    case Algebra::B: return 'B';
    case Algebra::C: return 'C';
    case Algebra::D: return 'D';
  }
  return '?';
}

inline Algebra parse_algebra(std::string_view text) {
  if (text == "A") return Algebra::A;
  if (text == "B") return Algebra::B;
  if (text == "C") return Algebra::C;
  if (text == "D") return Algebra::D;
  throw ParseError("unknown algebra type '" + std::string(text) + "'");
}

// Sequence of positive blocks with cached prefix sums.
template <Integer Int = BigInt>
class Composition {
 public:
  Composition() : prefix_{Int(0)} {}

  explicit Composition(std::vector<Int> blocks) : blocks_(std::move(blocks)) {
    prefix_.reserve(blocks_.size() + 1);
    prefix_.push_back(0);
    for (const auto& b : blocks_) {
      if (b <= 0) throw CompositionError("composition blocks must be positive, got " + to_string(b));
      prefix_.push_back(prefix_.back() + b);
    }
  }

  Composition(std::initializer_list<Int> blocks) : Composition(std::vector<Int>(blocks)) {}

  const std::vector<Int>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  const Int& total() const { return prefix_.back(); }
  const Int& operator[](std::size_t i) const { return blocks_[i]; }
  const Int& back() const { return blocks_.back(); }

  // a_1 + ... + a_i
  const Int& prefix(std::size_t i) const { return prefix_[i]; }

  Composition reversed() const { return Composition(std::vector<Int>(blocks_.rbegin(), blocks_.rend())); }

  template <Integer Out>
  Composition<Out> as() const {
    std::vector<Out> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) out.push_back(convert<Out>(b));
    return Composition<Out>(std::move(out));
  }

  friend bool operator==(const Composition& x, const Composition& y) { return x.blocks_ == y.blocks_; }

 private:
  std::vector<Int> blocks_;
  std::vector<Int> prefix_;
};

// Drops zero entries; rejects negative ones.
template <Integer Int>
Composition<Int> normalize(const std::vector<Int>& entries) {
  std::vector<Int> kept;
  for (const auto& e : entries) {
    if (e < 0) throw CompositionError("negative block " + to_string(e));
    if (e != 0) kept.push_back(e);
  }
  return Composition<Int>(std::move(kept));
}

template <Integer Int = BigInt>
struct SeaweedSpec {
  Algebra type = Algebra::A;
  Int n = 1;
  Composition<Int> top;
  Composition<Int> bottom;

  template <Integer Out>
  SeaweedSpec<Out> as() const {
    return {type, convert<Out>(n), top.template as<Out>(), bottom.template as<Out>()};
  }

  friend bool operator==(const SeaweedSpec& x, const SeaweedSpec& y) {
    return x.type == y.type && x.n == y.n && x.top == y.top && x.bottom == y.bottom;
  }
};

enum class Side { top, bottom };

inline const char* side_name(Side s) { return s == Side::top ? "top" : "bottom"; }

struct XiMembership {
  bool in_xi = false;
  Side full_side = Side::top;
};

// One total is n with last block > 1, the other is n - 1.
template <Integer Int>
XiMembership xi_pair(const Int& n, const Composition<Int>& top, const Composition<Int>& bottom) {
  if (n <= 1) return {};
  if (top.total() == n && bottom.total() == n - 1 && !top.empty() && top.back() > 1)
    return {true, Side::top};
  if (bottom.total() == n && top.total() == n - 1 && !bottom.empty() && bottom.back() > 1)
    return {true, Side::bottom};
  return {};
}

template <Integer Int>
XiMembership xi_membership(const SeaweedSpec<Int>& spec) {
  if (spec.type != Algebra::D) return {};
  return xi_pair(spec.n, spec.top, spec.bottom);
}

namespace detail {

template <Integer Int>
Composition<Int> drop_last(const Composition<Int>& c) {
  std::vector<Int> blocks = c.blocks();
  blocks.pop_back();
  return Composition<Int>(std::move(blocks));
}

}  // namespace detail

template <Integer Int>
SeaweedSpec<Int> make_spec(Algebra type, const Int& n, Composition<Int> top, Composition<Int> bottom) {
  if (n < 1) throw SpecError("rank must be positive, got " + to_string(n));
  if (type == Algebra::A) {
    if (top.total() != n || bottom.total() != n)
      throw SpecError("type A needs both totals equal to n = " + to_string(n));
    return {type, n, std::move(top), std::move(bottom)};
  }
  if (top.total() > n || bottom.total() > n)
    throw SpecError("composition total exceeds rank n = " + to_string(n));
  if (type == Algebra::D) {
    // A trailing 1 on a full side is dropped unless that would land in Xi_n.
    auto trim = [&](Composition<Int>& side, const Composition<Int>& other, bool side_is_top) {
      if (side.total() != n || side.empty() || side.back() != 1) return;
      Composition<Int> cut = detail::drop_last(side);
      XiMembership xi = side_is_top ? xi_pair(n, cut, other) : xi_pair(n, other, cut);
      if (!xi.in_xi) side = std::move(cut);
    };
    trim(top, bottom, true);
    trim(bottom, top, false);
  }
  return {type, n, std::move(top), std::move(bottom)};
}

template <Integer Int>
SeaweedSpec<Int> make_spec(Algebra type, const Int& n, const std::vector<Int>& top, const std::vector<Int>& bottom) {
  return make_spec(type, n, normalize(top), normalize(bottom));
}

template <Integer Int>
SeaweedSpec<Int> make_spec(Algebra type, const Int& n, std::initializer_list<Int> top, std::initializer_list<Int> bottom) {
  return make_spec(type, n, normalize(std::vector<Int>(top)), normalize(std::vector<Int>(bottom)));
}

template <Integer Int>
std::string format_composition(const Composition<Int>& c) {
  if (c.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += to_string(c[i]);
  }
  return out;
}

template <Integer Int>
std::string format_spec(const SeaweedSpec<Int>& spec) {
  return std::string(1, letter(spec.type)) + ":" + to_string(spec.n) + ":" + format_composition(spec.top) + "|" +
         format_composition(spec.bottom);
}

template <Integer Int = BigInt>
Composition<Int> parse_composition(std::string_view text) {
  if (text == "-" || text.empty()) return {};
  std::vector<Int> blocks;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      blocks.push_back(from_string<Int>(part));
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad block in '") + std::string(text) + "': " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    return normalize(blocks);
  } catch (const CompositionError& e) {
    throw ParseError(e.what());
  }
}

// TYPE:n:top|bottom
template <Integer Int = BigInt>
SeaweedSpec<Int> parse_spec(std::string_view text) {
  std::size_t c1 = text.find(':');
  std::size_t c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  std::size_t bar = c2 == std::string_view::npos ? c2 : text.find('|', c2 + 1);
  if (c1 == std::string_view::npos || c2 == std::string_view::npos || bar == std::string_view::npos)
    throw ParseError("expected TYPE:n:top|bottom, got '" + std::string(text) + "'");
  Algebra type = parse_algebra(text.substr(0, c1));
  Int n;
  try {
    n = from_string<Int>(text.substr(c1 + 1, c2 - c1 - 1));
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad rank: ") + e.what());
  }
  auto top = parse_composition<Int>(text.substr(c2 + 1, bar - c2 - 1));
  auto bottom = parse_composition<Int>(text.substr(bar + 1));
  return make_spec(type, n, std::move(top), std::move(bottom));
}

// Matrix size of the ambient algebra.
template <Integer Int>
Int ambient_size(Algebra type, const Int& n) {
  switch (type) {
    case Algebra::A: return n;
    case Algebra::B: return 2 * n + 1;
    default: return 2 * n;
  }
}

// Visits every composition of total in lexicographic order of cut masks.
template <Integer Int, class F>
void for_each_composition(int total, F&& visit) {
  if (total == 0) {
    visit(Composition<Int>());
    return;
  }
  const std::uint64_t masks = std::uint64_t(1) << (total - 1);
  std::vector<Int> blocks;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    blocks.clear();
    Int run = 1;
    for (int bit = 0; bit < total - 1; ++bit) {
      if (mask & (std::uint64_t(1) << bit)) {
        blocks.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    blocks.push_back(run);
    visit(Composition<Int>(blocks));
  }
}

// All canonical specs of one type and rank, each listed once.
template <Integer Int>
std::vector<SeaweedSpec<Int>> enumerate_specs(Algebra type, int n) {
  std::vector<SeaweedSpec<Int>> out;
  std::vector<Composition<Int>> sides;
  if (type == Algebra::A) {
    for_each_composition<Int>(n, [&](Composition<Int> c) { sides.push_back(std::move(c)); });
  } else {
    for (int total = 0; total <= n; ++total)
      for_each_composition<Int>(total, [&](Composition<Int> c) { sides.push_back(std::move(c)); });
  }
  for (const auto& top : sides) {
    for (const auto& bottom : sides) {
      auto spec = make_spec(type, Int(n), top, bottom);
      if (spec.top == top && spec.bottom == bottom) out.push_back(std::move(spec));
    }
  }
  return out;
}

}  // namespace seaweed
