// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "property_checks.hpp"

#include "seaweed/seaweed.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

using namespace seaweed;
using L = long long;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f ms", ms);
  return buf;
}

bool has_state(const ReductionTrace<BigInt>& trace, L t, std::vector<L> blocks) {
  std::vector<BigInt> want(blocks.begin(), blocks.end());
  for (const auto& step : trace.steps)
    if (step.after.t == t && step.after.blocks == want) return true;
  return false;
}

Verdict c1() {
  auto start = Clock::now();
  auto r = index_reduced(parse_spec("C:200:15,185|17,61,117"));
  const double ms = ms_since(start);
  bool chain = has_state(r.trace, 400, {185, 15, 17, 61, 117}) && has_state(r.trace, 385, {185, 17, 61, 117}) &&
               has_state(r.trace, 369, {185, 1, 61, 117}) && has_state(r.trace, 185, {1, 1, 61, 117}) &&
               has_state(r.trace, 69, {1, 1, 61, 1}) && has_state(r.trace, 9, {1, 1, 1, 1});
  bool pass = r.index == 0 && chain && ms < 100;
  return {pass, "index " + to_string(r.index) + ", chain " + (chain ? "reproduced" : "missing") + ", " + fmt_ms(ms)};
}

Verdict c2() {
  auto start = Clock::now();
  auto r = index_reduced(parse_spec("D:335:218,15,102|33,301"));
  const double ms = ms_since(start);
  const auto& f = r.trace.final_state;
  bool terminal = r.trace.terminal == "psi" && f.t == 2 && f.blocks == std::vector<BigInt>{2} &&
                  r.trace.terminal_value == 0 && f.alpha == 3;
  bool chain = has_state(r.trace, 452, {102, 15, 33, 302}) && has_state(r.trace, 152, {102, 15, 33, 2}) &&
               has_state(r.trace, 52, {2, 15, 33, 2}) && has_state(r.trace, 22, {2, 15, 3, 2}) &&
               has_state(r.trace, 7, {2, 3, 2}) && has_state(r.trace, 4, {2, 2});
  bool pass = r.index == 3 && terminal && chain && ms < 100;
  return {pass, "index " + to_string(r.index) + ", terminal Psi(2|2) = " + to_string(r.trace.terminal_value) +
                    ", chain " + (chain ? "reproduced" : "missing") + ", " + fmt_ms(ms)};
}

Verdict c3() {
  int bad = 0;
  for (L n = 2; n <= 200; ++n) {
    auto s = make_spec<BigInt>(Algebra::D, n, Composition<BigInt>({n}), Composition<BigInt>({n - 1}));
    if (index_D_reduced(s).index != std::llabs(n - 2)) ++bad;
  }
  return {bad == 0, "199 ranks, " + std::to_string(bad) + " mismatches"};
}

Verdict c4() {
  int bad = 0, count = 0;
  for (L n = 3; n <= 32; ++n)
    for (L a = 1; a <= n - 2; ++a) {
      const L expected = std::llabs(std::gcd(a, n) - 2);
      auto full_c = make_spec<BigInt>(Algebra::D, n, Composition<BigInt>({a, n - a - 1}), Composition<BigInt>({n}));
      auto full_ab = make_spec<BigInt>(Algebra::D, n, Composition<BigInt>({a, n - a}), Composition<BigInt>({n - 1}));
      const BigInt formula = index_D_threeblock(three_block<BigInt>(a, n - a - 1, n, n));
      count += 2;
      if (index_D_reduced(full_c).index != expected || formula != expected) ++bad;
      if (index_D_reduced(full_ab).index != expected) ++bad;
    }
  return {bad == 0, std::to_string(count) + " specs, " + std::to_string(bad) + " mismatches"};
}

Verdict c5() {
  auto start = Clock::now();
  struct Range {
    Algebra type;
    int max_n;
  };
  std::size_t total = 0, xi = 0, bad = 0;
  std::string first;
  for (Range r : {Range{Algebra::A, 10}, Range{Algebra::B, 4}, Range{Algebra::C, 5}, Range{Algebra::D, 5}}) {
    for (int n = 1; n <= r.max_n; ++n) {
      for (const auto& s : enumerate_specs<L>(r.type, n)) {
        ++total;
        if (xi_membership(s).in_xi) ++xi;
        const L m = meander_index(s);
        const L red = static_cast<L>(index_reduced(s).index);
        const L o = oracle_index(s, 3, 0, oracle_prime, RealizeOptions{24, false}).index;
        if (m != red || m != o) {
          if (bad++ == 0)
            first = format_spec(s) + " meander " + std::to_string(m) + " reduce " + std::to_string(red) + " oracle " +
                    std::to_string(o);
        }
      }
    }
  }
  std::string detail = std::to_string(total) + " specs (" + std::to_string(xi) + " in Xi), " + std::to_string(bad) +
                       " mismatches, " + fmt_ms(ms_since(start));
  if (bad) detail += ", first " + first;
  return {bad == 0 && xi > 0 && xi < total, detail};
}

Verdict c6() {
  std::size_t count = 0, bad = 0, frobenius = 0;
  std::string first;
  for (L a = 1; a <= 11; ++a)
    for (L b = 1; a + b <= 12; ++b)
      for (L c = 1; c <= 12; ++c) {
        const L s = std::max(a + b, c);
        for (L n = s; n <= s + 3; ++n) {
          auto q = three_block(a, b, c, n);
          for (Algebra t : {Algebra::B, Algebra::C, Algebra::D}) {
            if (t == Algebra::D && a + b == n && b == 1) continue;
            auto spec = three_block_spec(t, q);
            const L formula = t == Algebra::D ? index_D_threeblock(q) : index_BC_threeblock(q);
            const L red = static_cast<L>(index_reduced(spec).index);
            const L mea = meander_index(spec);
            bool ok = formula == red && red == mea;
            if (t != Algebra::D) {
              const bool verdict = frobenius_threeblock(q, t).is_frobenius;
              ok = ok && verdict == (red == 0);
              frobenius += verdict;
            }
            ++count;
            if (!ok && bad++ == 0) first = format_spec(spec);
          }
        }
      }
  std::string detail = std::to_string(count) + " specs, " + std::to_string(frobenius) + " Frobenius verdicts, " +
                       std::to_string(bad) + " mismatches";
  if (bad) detail += ", first " + first;
  return {bad == 0, detail};
}

Verdict c7() {
  auto r = frobenius_census(5, true);
  bool counts = true;
  std::ostringstream table;
  for (const auto& a : r.a_rows) {
    const auto even = r.d_row(2 * a.n)->members.size();
    if (even != 2 * a.members.size()) counts = false;
    if (a.n <= 4 && !r.d_row(2 * a.n + 1)->members.empty()) counts = false;
    table << " " << a.n << ":" << a.members.size() << "/" << even;
  }
  bool pass = counts && r.reduction_confirmed && r.bijection && r.issues.empty();
  return {pass, "FA/FD2n" + table.str() + ", odd rows empty " + (counts ? "yes" : "no") + ", bijection " +
                    (r.bijection ? "yes" : "no") + ", reduction confirms " + (r.reduction_confirmed ? "all" : "not all")};
}

Verdict c8() {
  std::size_t count = 0, bad = 0, frobenius = 0;
  for (L a = 1; a <= 8; ++a)
    for (L b = 1; b <= 8; ++b)
      for (L m = 1; m <= 6; ++m) {
        const L value = index_D_aab(a, b, m);
        const L red = static_cast<L>(index_reduced(aab_spec(a, b, m)).index);
        const bool verdict = frobenius_aab(a, b, m).is_frobenius;
        frobenius += verdict;
        ++count;
        if (value != red || verdict != (red == 0)) ++bad;
      }
  return {bad == 0, std::to_string(count) + " triples, " + std::to_string(frobenius) + " Frobenius, " +
                        std::to_string(bad) + " mismatches"};
}

Verdict c9() {
  props::Sampler g(9);
  struct Named {
    const char* name;
    props::Outcome outcome;
  };
  std::size_t first = 0, second = 0;
  std::vector<Named> all{{"swap", props::swap_invariance(g)},
                         {"rank padding", props::rank_padding(g)},
                         {"full block", props::full_block_conversion(g)},
                         {"alpha step", props::alpha_steps(g, 100)},
                         {"4ts padding", props::four_ts_padding(g)},
                         {"gap", props::gap(g)},
                         {"gl relation", props::gl_relation(g, &first, &second)}};
  bool pass = first > 0 && second > 0;
  std::string detail;
  for (const auto& n : all) {
    pass = pass && n.outcome.ok();
    detail += std::string(detail.empty() ? "" : ", ") + n.name + " " + std::to_string(n.outcome.instances - n.outcome.failures.size()) +
              "/" + std::to_string(n.outcome.instances);
  }
  return {pass, detail};
}

using ArcSet = std::set<std::tuple<std::string, std::size_t, std::size_t>>;

ArcSet svg_arcs(const std::string& svg) {
  ArcSet out;
  std::regex path(R"re(<path class="arc ([a-z ]+)" data-from="(\d+)" data-to="(\d+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), path); it != std::sregex_iterator(); ++it)
    out.emplace((*it)[1], std::stoul((*it)[2]), std::stoul((*it)[3]));
  return out;
}

Verdict c10() {
  struct Figure {
    const char* spec;
    ArcSet arcs;
  };
  const std::vector<Figure> figures{
      {"A:9:2,4,3|5,2,2",
       {{"bottom", 1, 2}, {"bottom", 3, 6}, {"bottom", 4, 5}, {"bottom", 7, 9},
        {"top", 1, 5}, {"top", 2, 4}, {"top", 6, 7}, {"top", 8, 9}}},
      {"C:5:2,3|3,1",
       {{"bottom", 1, 2}, {"bottom", 3, 5}, {"bottom", 6, 8}, {"bottom", 9, 10},
        {"top", 1, 3}, {"top", 5, 6}, {"top", 8, 10}}},
      {"D:10:1,6,3|3,2,4",
       {{"top", 1, 3}, {"top", 4, 5}, {"top", 6, 10}, {"top", 7, 9},
        {"top", 11, 15}, {"top", 12, 14}, {"top", 16, 17}, {"top", 18, 20},
        {"bottom", 2, 7}, {"bottom", 3, 6}, {"bottom", 4, 5}, {"bottom crossed", 8, 11},
        {"bottom crossed", 10, 13}, {"bottom", 14, 19}, {"bottom", 15, 18}, {"bottom", 16, 17}}},
      {"D:5:4|5",
       {{"top crossed", 1, 6}, {"top", 2, 4}, {"top crossed", 5, 10}, {"top", 7, 9},
        {"bottom", 1, 5}, {"bottom", 2, 4}, {"bottom", 6, 10}, {"bottom", 7, 9}}},
  };
  std::string detail;
  bool pass = true;
  for (const auto& f : figures) {
    auto spec = parse_spec<L>(f.spec);
    const std::string first = render_svg(build(spec));
    const std::string second = render_svg(build(parse_spec<L>(f.spec)));
    const bool arcs = svg_arcs(first) == f.arcs;
    const bool stable = first == second;
    pass = pass && arcs && stable;
    detail += std::string(detail.empty() ? "" : ", ") + f.spec + (arcs ? " arcs ok" : " arcs differ") +
              (stable ? "" : " unstable");
  }
  return {pass, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"symplectic worked example", c1},
      {"orthogonal worked example", c2},
      {"D (n | n-1) family, n <= 200", c3},
      {"D (a, n-a-1 | n) closed form, n <= 32", c4},
      {"oracle = meander = reduction, matrix size <= 10", c5},
      {"three-block grids and Frobenius list", c6},
      {"doubling census", c7},
      {"phi_m family", c8},
      {"property suites", c9},
      {"figure rendering", c10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << v.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
