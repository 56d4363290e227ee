#pragma once

#include "seaweed/core.hpp"
#include "seaweed/meander.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seaweed {

// chi of q^A(a, b | a + b)
template <Integer Int>
Int index_A_twoblock(const Int& a, const Int& b) {
  return gcd(a, b);
}

// chi of q^A(a, b | c, d) with a + b = c + d
template <Integer Int>
Int index_A_threeblock(const Int& a, const Int& b, const Int& c, const Int& d) {
  if (a + b != c + d) throw SpecError("index_A_threeblock needs a + b = c + d");
  return gcd(Int(a + b), Int(b + c));
}

// chi of q^C_n(a | b); sides are swapped first when b > a.
template <Integer Int>
Int index_C_twoblock(const Int& n, Int a, Int b) {
  if (b > a) std::swap(a, b);
  if (a > n || b < 1) throw SpecError("index_C_twoblock needs 1 <= b <= a <= n");
  if (a == b) return n;
  const Int gap = a - b;
  const Int r = rem(a, gap);
  return half(r) + half(Int(gap - r)) + n - a;
}

template <Integer Int = BigInt>
struct ThreeBlockParams {
  Int a, b, c, n;
  Int s, p, r;
};

template <Integer Int>
ThreeBlockParams<Int> three_block(const Int& a, const Int& b, const Int& c, const Int& n) {
  if (a < 1 || b < 1 || c < 1) throw SpecError("three-block parameters must be positive");
  ThreeBlockParams<Int> q{a, b, c, n, 0, 0, 0};
  q.s = a + b > c ? Int(a + b) : c;
  q.p = gcd(Int(a + b), Int(b + c));
  q.r = abs_value(Int(a + b - c));
  if (q.s > n) throw SpecError("three-block needs max(a+b, c) <= n");
  return q;
}

template <Integer Int>
SeaweedSpec<Int> three_block_spec(Algebra type, const ThreeBlockParams<Int>& q) {
  return make_spec(type, q.n, Composition<Int>({q.a, q.b}), Composition<Int>({q.c}));
}

// Index at n = s, shifted by n - s.
template <Integer Int>
Int index_BC_threeblock(const ThreeBlockParams<Int>& q) {
  const Int shift = q.n - q.s;
  if (q.p > q.r) return q.p - q.r + half(q.r) + shift;
  if (is_odd(q.p) == is_odd(q.r)) return half(q.r) + shift;
  return half(q.r) - 1 + shift;
}

template <Integer Int>
Int index_D_threeblock(const ThreeBlockParams<Int>& q, std::size_t bound = default_meander_bound) {
  if (q.a + q.b == q.n && q.b == 1) throw SpecError("type D three-block needs b > 1 when a + b = n");
  XiMembership xi = xi_pair(q.n, Composition<Int>({q.a, q.b}), Composition<Int>({q.c}));
  if (xi.in_xi) return abs_value(Int(gcd(q.a, q.n) - 2));
  const Int base = index_BC_threeblock(q);
  if (!is_odd(q.r)) return base;
  if (q.s == q.n) {
    Meander g = build_BC(three_block_spec(Algebra::D, q), bound);
    if (central_arc_in_segment(g, components(g))) return base + 1;
  }
  return base - 1;
}

struct FrobeniusVerdict {
  bool is_frobenius = false;
  std::string matched_condition;
};

template <Integer Int>
FrobeniusVerdict frobenius_threeblock(const ThreeBlockParams<Int>& q, Algebra type) {
  auto hit = [](const char* name) { return FrobeniusVerdict{true, name}; };
  if (type == Algebra::B || type == Algebra::C) {
    if (q.s != q.n) return {};
    if (q.r == 1 && q.p == 1) return hit("r=1,p=1");
    if (q.r == 2 && q.p == 1) return hit("r=2,p=1");
    if (q.r == 3 && q.p == 2) return hit("r=3,p=2");
    return {};
  }
  if (type == Algebra::D) {
    const Int g = gcd(q.a, q.n);
    if (q.r == 1 && g == 2 && q.s == q.n) return hit("r=1,q=2,max=n");
    if (q.r == 1 && q.p == 1 && q.s == q.n - 1) return hit("r=1,p=1,max=n-1");
    if (q.r == 2 && q.p == 1 && q.s == q.n) return hit("r=2,p=1,max=n");
    if (q.r == 3 && q.p == 2 && q.s == q.n - 1) return hit("r=3,p=2,max=n-1");
    return {};
  }
  throw SpecError("frobenius_threeblock covers types B, C and D");
}

// a_{k+1} = k, a_i = 1 + alpha_i (a_{i+1} + ... + a_{k+1} - i + 1), spec C:r:r|a.
template <Integer Int>
SeaweedSpec<Int> lemF_family(const std::vector<Int>& alphas) {
  const std::size_t k = alphas.size();
  if (k == 0) throw SpecError("lemF_family needs k >= 1");
  std::vector<Int> a(k);
  Int tail = Int(static_cast<long long>(k));
  for (std::size_t i = k; i >= 1; --i) {
    if (alphas[i - 1] < 0) throw SpecError("lemF_family needs alphas >= 0");
    a[i - 1] = 1 + alphas[i - 1] * (tail - Int(static_cast<long long>(i)) + 1);
    tail += a[i - 1];
  }
  Composition<Int> bottom(a);
  const Int r = bottom.total() + Int(static_cast<long long>(k));
  return make_spec(Algebra::C, r, Composition<Int>({r}), bottom);
}

// (n | a) -> (n + 4ts | 2s x t, a, 2s x t), s = n - |a|.
template <Integer Int>
SeaweedSpec<Int> padding_family(const SeaweedSpec<Int>& spec, const Int& t) {
  if (spec.type != Algebra::C && spec.type != Algebra::B) throw SpecError("padding_family needs a B or C spec");
  if (spec.top.size() != 1 || spec.top[0] != spec.n) throw SpecError("padding_family needs a spec of the form (n | a)");
  if (t < 0) throw SpecError("padding_family needs t >= 0");
  const Int s = spec.n - spec.bottom.total();
  std::vector<Int> blocks;
  for (Int x = 0; x < t; ++x) blocks.push_back(2 * s);
  blocks.insert(blocks.end(), spec.bottom.blocks().begin(), spec.bottom.blocks().end());
  for (Int x = 0; x < t; ++x) blocks.push_back(2 * s);
  const Int n = spec.n + 4 * t * s;
  return make_spec(spec.type, n, Composition<Int>({n}), normalize(blocks));
}

template <Integer Int>
Int phi_m(const Int& a, const Int& b, const Int& m) {
  const bool odd_a = is_odd(a), odd_b = is_odd(b);
  if (odd_a && odd_b) return half(m) + 1;
  if (odd_a) return half(Int(m + 1));
  if (odd_b) return 1;
  throw DomainError("phi_m is undefined when both arguments are even");
}

// D:n:n|a,...,a,b with m copies of a and n = ma + b + 1.
template <Integer Int>
SeaweedSpec<Int> aab_spec(const Int& a, const Int& b, const Int& m) {
  if (a < 1 || b < 1 || m < 1) throw SpecError("aab_spec needs a, b, m >= 1");
  std::vector<Int> blocks;
  for (Int x = 0; x < m; ++x) blocks.push_back(a);
  blocks.push_back(b);
  const Int n = m * a + b + 1;
  return make_spec(Algebra::D, n, Composition<Int>({n}), Composition<Int>(blocks));
}

template <Integer Int>
Int index_D_aab(const Int& a, const Int& b, const Int& m) {
  if (a < 1 || b < 1 || m < 1) throw SpecError("index_D_aab needs a, b, m >= 1");
  const Int p = gcd(a, Int(b + 1));
  if (p == 1) return phi_m(a, Int(b + 1), m);
  return p * phi_m(Int(a / p), Int((b + 1) / p), m) - 2;
}

template <Integer Int>
FrobeniusVerdict frobenius_aab(const Int& a, const Int& b, const Int& m) {
  if (gcd(a, Int(b + 1)) != 2) return {};
  const Int x = a / 2, y = (b + 1) / 2;
  if (m == 1) return {true, "p=2,m=1"};
  if (!is_odd(x) && is_odd(y)) return {true, "p=2,a/2 even,(b+1)/2 odd"};
  if (is_odd(x) && !is_odd(y) && m == 2) return {true, "p=2,a/2 odd,(b+1)/2 even,m=2"};
  return {};
}

}  // namespace seaweed

namespace seaweed {

template <Integer Int = BigInt>
struct FormulaValue {
  Int index = 0;
  std::string name;
};

// Closed form for the spec when its shape has one, trying both orientations.
template <Integer Int>
std::optional<FormulaValue<Int>> formula_index(const SeaweedSpec<Int>& spec) {
  const auto& x = spec.top;
  const auto& y = spec.bottom;
  const Int& n = spec.n;
  auto found = [](Int v, const char* name) { return std::optional<FormulaValue<Int>>(FormulaValue<Int>{v, name}); };
  if (spec.type == Algebra::A) {
    if (x.size() == 1 && y.size() == 1) return found(n, "A one-block");
    if (x.size() == 2 && y.size() == 1) return found(index_A_twoblock(x[0], x[1]), "A two-block");
    if (x.size() == 1 && y.size() == 2) return found(index_A_twoblock(y[0], y[1]), "A two-block");
    if (x.size() == 2 && y.size() == 2) return found(index_A_threeblock(x[0], x[1], y[0], y[1]), "A three-block");
    return std::nullopt;
  }
  if (spec.type == Algebra::D) {
    if (x.size() == 1 && y.size() == 1 && x[0] == n && y[0] == n - 1 && n > 1)
      return found(abs_value(Int(n - 2)), "D (n | n-1)");
    if (x.size() == 1 && y.size() == 1 && y[0] == n && x[0] == n - 1 && n > 1)
      return found(abs_value(Int(n - 2)), "D (n | n-1)");
  } else {
    if (x.size() == 1 && y.size() == 1) return found(index_C_twoblock(n, x[0], y[0]), "BC two-block");
  }
  auto three = [&](const Composition<Int>& pair, const Composition<Int>& single) -> std::optional<FormulaValue<Int>> {
    if (pair.size() != 2 || single.size() != 1) return std::nullopt;
    auto q = three_block(pair[0], pair[1], single[0], n);
    if (spec.type == Algebra::D) {
      if (pair[0] + pair[1] == n && pair[1] == 1) return std::nullopt;
      return found(index_D_threeblock(q), "D three-block");
    }
    return found(index_BC_threeblock(q), "BC three-block");
  };
  if (auto v = three(x, y)) return v;
  if (auto v = three(y, x)) return v;
  if (spec.type == Algebra::D && x.size() == 1 && x[0] == n && y.size() >= 2) {
    const Int a = y[0], b = y.back();
    const Int m = Int(static_cast<long long>(y.size() - 1));
    bool uniform = true;
    for (std::size_t i = 0; i + 1 < y.size(); ++i) uniform = uniform && y[i] == a;
    if (uniform && n == m * a + b + 1)
      return found(index_D_aab(a, b, m), "D (n | a^m, b)");
  }
  return std::nullopt;
}

}  // namespace seaweed
