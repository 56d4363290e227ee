#pragma once

#include "seaweed/core.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/parallel.hpp"
#include "seaweed/reduction.hpp"

#include <map>
#include <string>
#include <vector>

namespace seaweed {

using Spec64 = SeaweedSpec<long long>;

inline constexpr int census_max_bound = 6;

struct CensusRow {
  int n = 0;
  std::vector<Spec64> members;
};

struct DoublingPair {
  Spec64 source;
  Spec64 full_top;
  Spec64 full_bottom;
};

struct CensusReport {
  int bound = 0;
  bool odd = false;
  std::vector<CensusRow> a_rows;  // F^A_n, n = 1..bound
  std::vector<CensusRow> d_rows;  // F^D_m in increasing m
  std::vector<DoublingPair> pairs;
  bool reduction_confirmed = true;
  bool bijection = true;
  std::vector<std::string> issues;

  const CensusRow* d_row(int m) const {
    for (const auto& r : d_rows)
      if (r.n == m) return &r;
    return nullptr;
  }
  bool ok() const { return reduction_confirmed && bijection && issues.empty(); }
};

// Number of Xi_m composition pairs: both orientations of 2^(m-2) full sides times 2^(m-2) others.
inline double xi_pair_count(int m) {
  if (m < 2) return 0;
  double side = 1;
  for (int i = 0; i < m - 2; ++i) side *= 2;
  return 2 * side * side;
}

inline std::vector<Composition<long long>> compositions(int total) {
  std::vector<Composition<long long>> out;
  for_each_composition<long long>(total, [&](Composition<long long> c) { out.push_back(std::move(c)); });
  return out;
}

// Type A seaweeds of gl(n) with index 1.
inline CensusRow frobenius_A(int n, unsigned jobs = 1) {
  const auto sides = compositions(n);
  std::vector<std::vector<Spec64>> found(sides.size());
  parallel_for(sides.size(), jobs, [&](std::size_t i) {
    for (const auto& bottom : sides) {
      Spec64 s{Algebra::A, n, sides[i], bottom};
      if (meander_index(s) == 1) found[i].push_back(s);
    }
  });
  CensusRow row{n, {}};
  for (auto& f : found) row.members.insert(row.members.end(), f.begin(), f.end());
  return row;
}

// Xi_m type D seaweeds of so(2m) with index 0.
inline CensusRow frobenius_D_xi(int m, unsigned jobs = 1) {
  CensusRow row{m, {}};
  if (m < 2) return row;
  std::vector<Composition<long long>> full;
  for (auto& c : compositions(m))
    if (c.back() > 1) full.push_back(std::move(c));
  const auto other = compositions(m - 1);
  std::vector<std::vector<Spec64>> found(full.size() * 2);
  parallel_for(found.size(), jobs, [&](std::size_t job) {
    const auto& f = full[job / 2];
    for (const auto& o : other) {
      Spec64 s = job % 2 == 0 ? Spec64{Algebra::D, m, f, o} : Spec64{Algebra::D, m, o, f};
      if (meander_index(s) == 0) found[job].push_back(std::move(s));
    }
  });
  for (auto& f : found) row.members.insert(row.members.end(), f.begin(), f.end());
  return row;
}

inline DoublingPair doubling_images(const Spec64& source) {
  std::vector<long long> a, b;
  for (auto x : source.top.blocks()) a.push_back(2 * x);
  for (auto x : source.bottom.blocks()) b.push_back(2 * x);
  const long long m = 2 * source.n;
  auto a_short = a, b_short = b;
  a_short.back() -= 1;
  b_short.back() -= 1;
  return {source, make_spec(Algebra::D, m, a, b_short), make_spec(Algebra::D, m, a_short, b)};
}

inline CensusReport frobenius_census(int bound, bool odd = false, unsigned jobs = 1) {
  if (bound < 1) throw SpecError("census bound must be at least 1");
  if (bound > census_max_bound) {
    double pairs = 0;
    for (int m = 2; m <= 2 * bound + (odd ? 1 : 0); ++m) pairs += xi_pair_count(m);
    throw BoundError("census bound " + std::to_string(bound) + " needs about " + std::to_string(static_cast<long long>(pairs)) +
                     " meander evaluations; the limit is " + std::to_string(census_max_bound));
  }
  CensusReport report;
  report.bound = bound;
  report.odd = odd;
  for (int n = 1; n <= bound; ++n) {
    report.a_rows.push_back(frobenius_A(n, jobs));
    report.d_rows.push_back(frobenius_D_xi(2 * n, jobs));
    if (odd) report.d_rows.push_back(frobenius_D_xi(2 * n + 1, jobs));
  }

  for (const auto& row : report.d_rows) {
    for (const auto& s : row.members) {
      if (index_D_reduced(s).index != 0) {
        report.reduction_confirmed = false;
        report.issues.push_back("reduction gives a nonzero index for " + format_spec(s));
      }
    }
    if (row.n % 2 == 1 && !row.members.empty()) report.issues.push_back("odd row " + std::to_string(row.n) + " is not empty");
  }

  for (const auto& arow : report.a_rows) {
    const CensusRow* drow = report.d_row(2 * arow.n);
    std::map<std::string, int> hits;
    for (const auto& s : drow->members) hits[format_spec(s)] = 0;
    for (const auto& s : arow.members) {
      DoublingPair p = doubling_images(s);
      for (const auto* image : {&p.full_top, &p.full_bottom}) {
        auto it = hits.find(format_spec(*image));
        if (it == hits.end()) {
          report.bijection = false;
          report.issues.push_back("image " + format_spec(*image) + " of " + format_spec(s) + " is not Frobenius");
        } else {
          ++it->second;
        }
      }
      report.pairs.push_back(std::move(p));
    }
    for (const auto& [name, count] : hits) {
      if (count != 1) {
        report.bijection = false;
        report.issues.push_back(name + " is hit " + std::to_string(count) + " times");
      }
    }
  }
  return report;
}

}  // namespace seaweed
