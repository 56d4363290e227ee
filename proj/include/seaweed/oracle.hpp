#pragma once

#include "seaweed/core.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seaweed {

inline constexpr std::uint64_t oracle_prime = 2147483647;  // 2^31 - 1

struct MatrixEntry {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  long long value = 0;
};

using SparseMatrix = std::vector<MatrixEntry>;
using LinearRow = std::vector<std::pair<std::uint32_t, long long>>;

struct MatrixAlgebraBasis {
  std::size_t m = 0;
  std::vector<SparseMatrix> basis;
  std::vector<LinearRow> constraints;

  std::size_t dim() const { return basis.size(); }
};

struct RealizeOptions {
  std::size_t bound = 24;
  bool check = true;
};

struct OracleResult {
  long long index = 0;
  std::size_t dim = 0;
  std::size_t trials = 0;
  std::vector<std::size_t> ranks;
  std::uint64_t prime = oracle_prime;
};

namespace oracle_detail {

constexpr std::uint64_t P = oracle_prime;

inline std::uint64_t reduce(std::uint64_t x) {
  x = (x & P) + (x >> 31);
  x = (x & P) + (x >> 31);
  return x >= P ? x - P : x;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return reduce(a * b); }

inline std::uint64_t power(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inverse(std::uint64_t a) { return power(a, P - 2); }

inline std::uint64_t from_signed(long long v) {
  long long r = v % static_cast<long long>(P);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(P) : r);
}

inline long long lift(std::uint64_t v) {
  return v > P / 2 ? static_cast<long long>(v) - static_cast<long long>(P) : static_cast<long long>(v);
}

// Reduced row echelon form mod P, built one sparse row at a time.
class Eliminator {
 public:
  explicit Eliminator(std::size_t vars) : pivot_of_(vars, -1), occurs_(vars), scratch_(vars, 0) {}

  void add(const LinearRow& row) {
    touched_.clear();
    for (auto [v, c] : row) bump(v, from_signed(c));
    for (std::size_t idx = 0; idx < touched_.size(); ++idx) {
      std::uint32_t v = touched_[idx];
      std::uint64_t c = scratch_[v];
      if (c == 0 || pivot_of_[v] < 0) continue;
      for (auto [u, w] : rows_[pivot_of_[v]]) bump(u, P - mul(c, w));
    }
    Row fresh;
    for (auto v : touched_) {
      if (scratch_[v] != 0 && pivot_of_[v] < 0) fresh.emplace_back(v, scratch_[v]);
      scratch_[v] = 0;
    }
    if (fresh.empty()) return;
    std::sort(fresh.begin(), fresh.end());
    const std::uint32_t pv = fresh.front().first;
    const std::uint64_t inv = inverse(fresh.front().second);
    for (auto& term : fresh) term.second = mul(term.second, inv);

    for (int id : occurs_[pv]) {
      Row& other = rows_[id];
      auto hit = std::find_if(other.begin(), other.end(), [&](const auto& t) { return t.first == pv; });
      if (hit == other.end()) continue;
      const std::uint64_t c = hit->second;
      touched_.clear();
      for (auto [u, w] : other) bump(u, w);
      for (auto [u, w] : fresh) bump(u, P - mul(c, w));
      other.clear();
      for (auto u : touched_) {
        if (scratch_[u] != 0) {
          other.emplace_back(u, scratch_[u]);
          if (u != static_cast<std::uint32_t>(pivot_index_[id])) occurs_[u].push_back(id);
        }
        scratch_[u] = 0;
      }
    }
    occurs_[pv].clear();
    const int id = static_cast<int>(rows_.size());
    pivot_of_[pv] = id;
    pivot_index_.push_back(static_cast<int>(pv));
    for (auto [u, w] : fresh)
      if (u != pv) occurs_[u].push_back(id);
    rows_.push_back(std::move(fresh));
  }

  // One vector per free variable, values mod P.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> nullspace() const {
    std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> out;
    for (std::uint32_t f = 0; f < pivot_of_.size(); ++f) {
      if (pivot_of_[f] >= 0) continue;
      std::vector<std::pair<std::uint32_t, std::uint64_t>> vec{{f, 1}};
      std::vector<int> ids = occurs_[f];
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      for (int id : ids) {
        for (auto [u, w] : rows_[id]) {
          if (u == f) {
            vec.emplace_back(static_cast<std::uint32_t>(pivot_index_[id]), (P - w) % P);
            break;
          }
        }
      }
      out.push_back(std::move(vec));
    }
    return out;
  }

 private:
  using Row = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

  void bump(std::uint32_t v, std::uint64_t c) {
    if (scratch_[v] == 0) touched_.push_back(v);
    scratch_[v] = reduce(scratch_[v] + c);
  }

  std::vector<int> pivot_of_;
  std::vector<int> pivot_index_;
  std::vector<std::vector<int>> occurs_;
  std::vector<Row> rows_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::uint32_t> touched_;
};

inline long long apply(const LinearRow& row, const std::vector<long long>& dense) {
  long long s = 0;
  for (auto [v, c] : row) s += c * dense[v];
  return s;
}

inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>>& M) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows ? M[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pr = rank;
    while (pr < rows && M[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(M[rank], M[pr]);
    const std::uint64_t inv = inverse(M[rank][c]);
    const auto& pivot = M[rank];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (M[r][c] == 0) continue;
      const std::uint64_t f = P - mul(M[r][c], inv);
      auto& row = M[r];
      for (std::size_t j = c; j < cols; ++j) row[j] = reduce(row[j] + f * pivot[j]);
    }
    ++rank;
  }
  return rank;
}

// Fraction-free elimination over the integers.
inline std::size_t rank_exact(std::vector<std::vector<BigInt>> M) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows ? M[0].size() : 0;
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pr = rank;
    while (pr < rows && M[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(M[rank], M[pr]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) M[r][j] = (M[rank][c] * M[r][j] - M[r][c] * M[rank][j]) / prev;
      M[r][c] = 0;
    }
    prev = M[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace oracle_detail

namespace oracle_detail {

struct System {
  std::size_t m = 0;
  std::vector<LinearRow> rows;

  std::uint32_t var(std::size_t p, std::size_t q) const { return static_cast<std::uint32_t>(p * m + q); }

  // X maps span(e_i : i in S) into itself: X_pq = 0 for q in S, p not in S.
  void stabilize(const std::vector<std::size_t>& S) {
    std::vector<bool> in(m, false);
    for (auto i : S) in[i] = true;
    for (auto q : S)
      for (std::size_t p = 0; p < m; ++p)
        if (!in[p]) rows.push_back({{var(p, q), 1}});
  }

  // X^T J + J X = 0 for the antidiagonal J with the given signs.
  void preserve(const std::vector<int>& sign) {
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p; q < m; ++q) {
        LinearRow row;
        const std::size_t rp = m - 1 - q, rq = m - 1 - p;
        row.emplace_back(var(rp, p), sign[rp]);
        if (var(rq, q) == var(rp, p))
          row.back().second += sign[p];
        else
          row.emplace_back(var(rq, q), sign[p]);
        if (row.size() == 1 && row[0].second == 0) continue;
        rows.push_back(std::move(row));
      }
    }
  }
};

inline std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t i = lo; i < hi; ++i) out.push_back(i);
  return out;
}

}  // namespace oracle_detail

// Basis of the stabilizer of the flag pair, found as a nullspace.
template <Integer Int>
MatrixAlgebraBasis realize(const SeaweedSpec<Int>& spec, RealizeOptions options = {}) {
  using namespace oracle_detail;
  const Int ambient = ambient_size(spec.type, spec.n);
  if (ambient > Int(static_cast<long long>(options.bound)))
    throw BoundError("ambient matrix size " + to_string(ambient) + " exceeds oracle bound " +
                     std::to_string(options.bound));
  System sys;
  sys.m = to_size(ambient);
  const std::size_t m = sys.m;
  const std::size_t n = to_size(spec.n);
  std::vector<std::size_t> top, bottom;
  for (std::size_t i = 1; i <= spec.top.size(); ++i) top.push_back(to_size(spec.top.prefix(i)));
  for (std::size_t i = 1; i <= spec.bottom.size(); ++i) bottom.push_back(to_size(spec.bottom.prefix(i)));

  if (spec.type == Algebra::A) {
    for (auto s : top) sys.stabilize(range(0, s));
    for (std::size_t i = 0; i + 1 < bottom.size(); ++i) sys.stabilize(range(bottom[i], m));
  } else {
    XiMembership xi = xi_membership(spec);
    for (std::size_t i = 0; i < top.size(); ++i) {
      if (xi.in_xi && xi.full_side == Side::bottom && i + 1 == top.size()) {
        auto S = range(0, n - 1);
        S.push_back(n);
        sys.stabilize(S);
      } else {
        sys.stabilize(range(0, top[i]));
      }
    }
    const std::size_t t = bottom.size();
    for (std::size_t i = 0; i < t; ++i) {
      const std::size_t suffix = bottom[t - 1 - i];
      if (xi.in_xi && xi.full_side == Side::top && i == 0) {
        auto S = range(n + 1, m);
        S.insert(S.begin(), n - 1);
        sys.stabilize(S);
      } else {
        sys.stabilize(range(m - suffix, m));
      }
    }
    std::vector<int> sign(m, 1);
    if (spec.type == Algebra::C)
      for (std::size_t i = m / 2; i < m; ++i) sign[i] = -1;
    sys.preserve(sign);
  }

  Eliminator elim(m * m);
  for (const auto& row : sys.rows) elim.add(row);
  MatrixAlgebraBasis out;
  out.m = m;
  for (const auto& vec : elim.nullspace()) {
    SparseMatrix x;
    for (auto [v, c] : vec) x.push_back({static_cast<std::uint32_t>(v / m), static_cast<std::uint32_t>(v % m), lift(c)});
    std::sort(x.begin(), x.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
      return std::pair(a.row, a.col) < std::pair(b.row, b.col);
    });
    out.basis.push_back(std::move(x));
  }
  out.constraints = std::move(sys.rows);

  if (options.check) {
    std::vector<long long> dense(m * m, 0);
    auto satisfies = [&](const std::vector<long long>& d) {
      for (const auto& row : out.constraints)
        if (apply(row, d) != 0) return false;
      return true;
    };
    for (const auto& x : out.basis) {
      std::fill(dense.begin(), dense.end(), 0);
      for (const auto& e : x) dense[e.row * m + e.col] = e.value;
      if (!satisfies(dense)) throw std::logic_error("lifted basis vector violates a constraint");
    }
    // Closure: every commutator satisfies the same linear constraints.
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
      for (std::size_t j = i + 1; j < out.basis.size(); ++j) {
        std::fill(dense.begin(), dense.end(), 0);
        for (const auto& e : out.basis[i])
          for (const auto& f : out.basis[j]) {
            if (e.col == f.row) dense[e.row * m + f.col] += e.value * f.value;
            if (f.col == e.row) dense[f.row * m + e.col] -= e.value * f.value;
          }
        if (!satisfies(dense)) throw std::logic_error("realized subspace is not closed under the bracket");
      }
    }
  }
  return out;
}

template <Integer Int>
std::size_t oracle_dim(const SeaweedSpec<Int>& spec, RealizeOptions options = {}) {
  return realize(spec, options).dim();
}

// dim - max rank of (f([x_i, x_j])) over random f; prime 0 runs exactly over Q.
inline OracleResult oracle_index(const MatrixAlgebraBasis& g, std::size_t trials = 3, std::uint64_t seed = 0,
                                 std::uint64_t prime = oracle_prime) {
  using namespace oracle_detail;
  if (trials == 0) throw std::invalid_argument("oracle_index needs at least one trial");
  if (prime != 0 && prime != oracle_prime)
    throw std::invalid_argument("oracle_index supports prime 2^31-1 or 0 (exact)");
  const std::size_t m = g.m, d = g.dim();
  OracleResult result;
  result.dim = d;
  result.trials = trials;
  result.prime = prime;
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::size_t rank = 0;
    if (prime != 0) {
      std::vector<std::uint64_t> F(m * m);
      for (auto& v : F) v = rng() % P;
      std::vector<std::vector<std::uint64_t>> M(d, std::vector<std::uint64_t>(d, 0));
      std::vector<std::uint64_t> G(m * m);
      for (std::size_t i = 0; i < d; ++i) {
        std::fill(G.begin(), G.end(), 0);
        // G = F x - x F
        for (const auto& e : g.basis[i]) {
          const std::uint64_t v = from_signed(e.value);
          for (std::size_t r = 0; r < m; ++r) {
            G[r * m + e.col] = reduce(G[r * m + e.col] + mul(F[r * m + e.row], v));
            G[e.row * m + r] = reduce(G[e.row * m + r] + P - mul(v, F[e.col * m + r]));
          }
        }
        for (std::size_t j = i + 1; j < d; ++j) {
          std::uint64_t s = 0;
          for (const auto& e : g.basis[j]) s = reduce(s + mul(G[e.col * m + e.row], from_signed(e.value)));
          M[i][j] = s;
          M[j][i] = s == 0 ? 0 : P - s;
        }
      }
      rank = rank_mod_p(M);
    } else {
      std::uniform_int_distribution<long long> pick(-1000000, 1000000);
      std::vector<long long> F(m * m);
      for (auto& v : F) v = pick(rng);
      std::vector<std::vector<BigInt>> M(d, std::vector<BigInt>(d, 0));
      std::vector<long long> G(m * m);
      for (std::size_t i = 0; i < d; ++i) {
        std::fill(G.begin(), G.end(), 0);
        for (const auto& e : g.basis[i]) {
          for (std::size_t r = 0; r < m; ++r) {
            G[r * m + e.col] += F[r * m + e.row] * e.value;
            G[e.row * m + r] -= e.value * F[e.col * m + r];
          }
        }
        for (std::size_t j = i + 1; j < d; ++j) {
          BigInt s = 0;
          for (const auto& e : g.basis[j]) s += BigInt(G[e.col * m + e.row]) * e.value;
          M[i][j] = s;
          M[j][i] = -s;
        }
      }
      rank = rank_exact(std::move(M));
    }
    if (rank % 2 != 0) throw std::logic_error("odd rank for an antisymmetric form");
    result.ranks.push_back(rank);
    best = std::max(best, rank);
  }
  result.index = static_cast<long long>(d) - static_cast<long long>(best);
  return result;
}

template <Integer Int>
OracleResult oracle_index(const SeaweedSpec<Int>& spec, std::size_t trials = 3, std::uint64_t seed = 0,
                          std::uint64_t prime = oracle_prime, RealizeOptions options = {}) {
  return oracle_index(realize(spec, options), trials, seed, prime);
}

}  // namespace seaweed
