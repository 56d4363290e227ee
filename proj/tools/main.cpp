// seaweed: index, render, verify, census and family commands.
#include "seaweed/seaweed.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace seaweed;

namespace {

enum Exit { ok = 0, failure = 1, parse_failure = 2, shape_failure = 3, mismatch = 4 };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Shape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t cross_check_bound = std::size_t(1) << 22;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

SeaweedSpec<BigInt> read_spec(const std::string& text) {
  try {
    return parse_spec<BigInt>(text);
  } catch (const Error& e) {
    throw Usage(e.what());
  }
}

bool meander_fits(const SeaweedSpec<BigInt>& s) {
  return ambient_size(s.type, s.n) <= BigInt(static_cast<std::uint64_t>(cross_check_bound));
}

int cmd_index(const std::string& text, const std::string& method, bool trace, bool json) {
  const auto spec = read_spec(text);
  Json out{{"schema", json_schema}, {"kind", "index"}, {"spec", format_spec(spec)}, {"method", method}};
  BigInt index = 0;
  std::optional<Reduced<BigInt>> reduced;
  if (method == "formula") {
    auto v = formula_index(spec);
    if (!v) throw Shape("no closed formula covers " + format_spec(spec));
    index = v->index;
    out["formula"] = v->name;
  } else if (method == "meander") {
    if (!meander_fits(spec)) throw Shape("meander too large for " + format_spec(spec));
    index = meander_index(spec);
  } else if (method == "reduce" || method == "auto") {
    reduced = index_reduced(spec);
    index = reduced->index;
    if (method == "auto" && meander_fits(spec)) {
      const long long m = meander_index(spec);
      out["meander"] = m;
      if (BigInt(m) != index)
        throw Mismatch("reduction gives " + to_string(index) + " but the meander gives " + std::to_string(m));
    }
  } else {
    throw Usage("unknown method " + method);
  }
  out["index"] = to_json_number(index);
  if (json)
    std::cout << out.dump() << "\n";
  else
    std::cout << to_string(index) << "\n";
  if (trace) {
    if (!reduced) reduced = index_reduced(spec);
    std::cout << trace_json_lines(reduced->trace);
  }
  return ok;
}

int cmd_render(const std::string& text, const std::string& format, const std::string& path) {
  const auto spec = read_spec(text);
  Format f;
  try {
    f = parse_format(format);
  } catch (const std::exception& e) {
    throw Usage(e.what());
  }
  const std::size_t bound = render_bound();
  Meander g = build(spec, bound);
  write_output(path, render(g, f, bound));
  return ok;
}

struct VerifyOptions {
  std::string type = "all";
  int max_n = 4;
  bool oracle = false;
  std::uint64_t seed = 0;
  std::size_t trials = 3;
  unsigned jobs = 1;
  std::size_t limit = 2000000;
  bool json = false;
};

struct Disagreement {
  std::string spec;
  std::vector<std::pair<std::string, long long>> values;
};

int cmd_verify(const VerifyOptions& o) {
  std::vector<Algebra> types;
  if (o.type == "all")
    types = {Algebra::A, Algebra::B, Algebra::C, Algebra::D};
  else
    try {
      types = {parse_algebra(o.type)};
    } catch (const Error& e) {
      throw Usage(e.what());
    }
  if (o.max_n < 1) throw Usage("--max-n must be at least 1");
  Json rows = Json::array();
  std::size_t checked = 0, oracle_runs = 0, formula_runs = 0;
  bool truncated = false;
  std::optional<Disagreement> first;
  for (Algebra type : types) {
    for (int n = 1; n <= o.max_n && !first; ++n) {
      auto specs = enumerate_specs<long long>(type, n);
      if (checked + specs.size() > o.limit) {
        truncated = true;
        break;
      }
      std::vector<std::optional<Disagreement>> bad(specs.size());
      std::vector<char> used_oracle(specs.size(), 0), used_formula(specs.size(), 0);
      parallel_for(specs.size(), o.jobs, [&](std::size_t i) {
        const auto& s = specs[i];
        std::vector<std::pair<std::string, long long>> v;
        v.emplace_back("meander", meander_index(s));
        v.emplace_back("reduce", static_cast<long long>(index_reduced(s).index));
        if (auto f = formula_index(s)) {
          v.emplace_back("formula", static_cast<long long>(f->index));
          used_formula[i] = 1;
        }
        if (o.oracle && ambient_size(s.type, s.n) <= 24) {
          v.emplace_back("oracle", oracle_index(s, o.trials, o.seed, oracle_prime, RealizeOptions{24, false}).index);
          used_oracle[i] = 1;
        }
        for (const auto& [name, value] : v)
          if (value != v[0].second) {
            bad[i] = Disagreement{format_spec(s), v};
            break;
          }
      });
      for (std::size_t i = 0; i < specs.size(); ++i) {
        oracle_runs += used_oracle[i];
        formula_runs += used_formula[i];
        if (bad[i] && !first) first = bad[i];
      }
      checked += specs.size();
      rows.push_back(Json{{"type", std::string(1, letter(type))}, {"n", n}, {"specs", specs.size()}});
      if (!o.json)
        std::cout << letter(type) << " n=" << n << " specs=" << specs.size() << (first ? " MISMATCH" : " agree") << "\n";
    }
    if (first || truncated) break;
  }
  Json out{{"schema", json_schema}, {"kind", "verify"}, {"rows", rows}, {"checked", checked},
           {"formula_checks", formula_runs}, {"oracle_checks", oracle_runs}, {"seed", o.seed},
           {"trials", o.trials}, {"truncated", truncated}};
  if (first) {
    Json values = Json::object();
    for (const auto& [name, value] : first->values) values[name] = value;
    out["mismatch"] = Json{{"spec", first->spec}, {"values", values}};
  }
  if (o.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    if (truncated) std::cout << "truncated: spec limit " << o.limit << " reached, later ranks not checked\n";
    if (first) {
      std::cout << "first mismatch " << first->spec << ":";
      for (const auto& [name, value] : first->values) std::cout << " " << name << "=" << value;
      std::cout << "\n";
    }
    std::cout << "checked " << checked << " specs, formula " << formula_runs << ", oracle " << oracle_runs
              << (first ? ", mismatch" : ", all agree") << "\n";
  }
  return first ? mismatch : ok;
}

int cmd_census(int max_n, bool odd, unsigned jobs, bool json, const std::string& path) {
  CensusReport report;
  try {
    report = frobenius_census(max_n, odd, jobs);
  } catch (const BoundError& e) {
    throw Shape(e.what());
  }
  const std::string text = to_json(report).dump(2) + "\n";
  if (!path.empty()) write_output(path, text);
  if (json) {
    if (path.empty()) std::cout << text;
  } else {
    std::cout << "n  #FA_n  #FD_2n" << (odd ? "  #FD_2n+1" : "") << "\n";
    for (const auto& a : report.a_rows) {
      std::cout << a.n << "  " << a.members.size() << "  " << report.d_row(2 * a.n)->members.size();
      if (odd) std::cout << "  " << report.d_row(2 * a.n + 1)->members.size();
      std::cout << "\n";
    }
    for (const auto& issue : report.issues) std::cout << "issue: " << issue << "\n";
    std::cout << (report.ok() ? "doubling bijection verified" : "census check failed") << "\n";
  }
  return report.ok() ? ok : mismatch;
}

std::vector<BigInt> parse_numbers(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream in(text);
  std::string item;
  try {
    while (std::getline(in, item, ',')) out.push_back(from_string<BigInt>(item));
  } catch (const Error& e) {
    throw Usage(e.what());
  }
  if (out.empty()) throw Usage("expected a comma-separated list of integers");
  return out;
}

void print_family_member(const SeaweedSpec<BigInt>& s) {
  std::cout << format_spec(s) << " index=" << to_string(index_reduced(s).index) << "\n";
}

int cmd_family(const std::string& kind, const std::string& alphas, const std::string& spec_text, const std::string& t,
               const std::string& from) {
  try {
    if (kind == "lemF") {
      if (alphas.empty()) throw Usage("lemF needs --alphas");
      print_family_member(lemF_family(parse_numbers(alphas)));
    } else if (kind == "padding") {
      if (spec_text.empty() || t.empty()) throw Usage("padding needs --spec and --t");
      print_family_member(padding_family(read_spec(spec_text), from_string<BigInt>(t)));
    } else if (kind == "thB") {
      if (from.empty()) throw Usage("thB needs --from");
      const auto source = read_spec(from);
      if (source.type != Algebra::A) throw Usage("thB needs a type A spec");
      auto small = source.as<long long>();
      if (meander_index(small) != 1) throw Shape(format_spec(source) + " does not have index 1");
      DoublingPair p = doubling_images(small);
      print_family_member(p.full_top.as<BigInt>());
      print_family_member(p.full_bottom.as<BigInt>());
    } else {
      throw Usage("unknown family " + kind);
    }
  } catch (const SpecError& e) {
    throw Usage(e.what());
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index of seaweed subalgebras of gl(n), so(2n+1), sp(2n), so(2n)"};
  app.require_subcommand(1);

  std::string spec_text, method = "auto", format = "ascii", output;
  bool trace = false, json = false;
  auto* index = app.add_subcommand("index", "compute the index of a spec");
  index->add_option("spec", spec_text, "spec such as C:200:15,185|17,61,117")->required();
  index->add_option("--method", method, "auto, meander, reduce or formula")
      ->check(CLI::IsMember({"auto", "meander", "reduce", "formula"}));
  index->add_flag("--trace", trace, "append the reduction trace as JSON lines");
  index->add_flag("--json", json, "print a JSON object");

  auto* render_cmd = app.add_subcommand("render", "draw the meander");
  render_cmd->add_option("spec", spec_text)->required();
  render_cmd->add_option("--format", format, "ascii or svg");
  render_cmd->add_option("-o,--output", output, "output path");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "compare all methods on every spec up to a rank");
  verify->add_option("--type", vo.type, "A, B, C, D or all");
  verify->add_option("--max-n", vo.max_n);
  verify->add_flag("--oracle", vo.oracle, "include the matrix oracle");
  verify->add_option("--seed", vo.seed);
  verify->add_option("--trials", vo.trials)->check(CLI::PositiveNumber);
  verify->add_option("--jobs", vo.jobs);
  verify->add_option("--limit", vo.limit, "maximum number of specs");
  verify->add_flag("--json", vo.json);

  int census_n = 1;
  bool odd = false;
  unsigned jobs = 1;
  auto* census = app.add_subcommand("census", "enumerate Frobenius seaweeds and check the doubling map");
  census->add_option("--max-n", census_n)->required();
  census->add_flag("--odd", odd, "also enumerate odd ranks");
  census->add_option("--jobs", jobs);
  census->add_flag("--json", json);
  census->add_option("-o,--output", output, "write the JSON report here");

  std::string kind, alphas, t, from;
  auto* family = app.add_subcommand("family", "generate specs from a family");
  family->add_option("kind", kind, "lemF, padding or thB")->required();
  family->add_option("--alphas", alphas, "lemF: comma separated alphas");
  family->add_option("--spec", spec_text, "padding: spec of the form C:n:n|a");
  family->add_option("--t", t, "padding: number of 2s blocks on each side");
  family->add_option("--from", from, "thB: type A spec of index 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parse_failure;
  }

  try {
    if (*index) return cmd_index(spec_text, method, trace, json);
    if (*render_cmd) return cmd_render(spec_text, format, output);
    if (*verify) return cmd_verify(vo);
    if (*census) return cmd_census(census_n, odd, jobs, json, output);
    if (*family) return cmd_family(kind, alphas, spec_text, t, from);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return parse_failure;
  } catch (const Shape& e) {
    std::cerr << "error: " << e.what() << "\n";
    return shape_failure;
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return shape_failure;
  } catch (const Mismatch& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return mismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failure;
  }
  return failure;
}
