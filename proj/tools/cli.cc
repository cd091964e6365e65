// Copyright 2026 The gbm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "gbm/broken_partition.h"
#include "gbm/cycle_graph.h"
#include "gbm/fock_oracle.h"
#include "gbm/identities.h"
#include "gbm/moments.h"
#include "gbm/parallel.h"
#include "gbm/q_product.h"
#include "json_io.h"

namespace gbm::cli {
namespace {

using io::Json;

struct Report {
  Json inputs = Json::object();
  Json results = Json::object();
  Json checks = Json::array();

  void Check(const std::string& name, const std::string& expected,
             const std::string& actual) {
    checks.push_back({{"name", name},
                      {"expected", expected},
                      {"actual", actual},
                      {"pass", expected == actual}});
  }
  void CheckBool(const std::string& name, bool ok) {
    Check(name, "true", ok ? "true" : "false");
  }
  bool AllPass() const {
    for (const Json& c : checks) {
      if (!c.at("pass").get<bool>()) return false;
    }
    return true;
  }
};

std::string Str(const Rational& q) { return ToString(q); }

std::string Float17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<Rational> ParseRationalList(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(ParseRational(item));
  }
  return out;
}

UncoloredT UncoloredByName(const std::string& name, int n) {
  if (name == "free") return FreeT;
  if (name == "tn") {
    return [n](const PairPartition& v) { return TNUncolored(n, v); };
  }
  throw std::invalid_argument("unknown t-function: " + name);
}

// Subcommand state filled in by CLI11.
struct Options {
  int pairs = 1;
  int colors = 1;
  bool list = false;
  std::string partition;
  std::string t = "tn";
  int n = 2;
  std::vector<int> ns;
  std::string alpha;
  std::string beta;
  int n_minus = 2;
  int n_plus = 2;
  std::string word;
  int max_pairs = 3;
  std::string q;
  std::string v;
  std::string n_list = "4,8,16,32";
  int max_points = 4;
  std::string q12 = "-1";
  bool left_legs_only = false;
};

void RunEnumerate(const Options& o, Report& r) {
  r.inputs = {{"pairs", o.pairs}, {"colors", o.colors}, {"list", o.list}};
  const auto all = EnumerateColored(o.pairs, o.colors);
  r.results["count"] = all.size();
  if (o.list) {
    Json items = Json::array();
    for (const auto& p : all) items.push_back(io::PartitionToJson(p));
    r.results["partitions"] = items;
  }
  long expected = 1;
  for (int k = 1; k < 2 * o.pairs; k += 2) expected *= k;
  for (int i = 0; i < o.pairs; ++i) expected *= o.colors;
  r.Check("count", std::to_string(expected), std::to_string(all.size()));
}

void RunGraph(const Options& o, Report& r) {
  const ColoredPairPartition p =
      AsTwoColored(io::PartitionFromJson(io::LoadJson(o.partition)));
  r.inputs = {{"partition", io::PartitionToJson(p)}};
  const CycleGraphAnalysis g = BuildGraph(p);
  Json rr = Json::array(), other = Json::array(), cls = Json::array();
  for (int k = 1; k <= p.base.size(); ++k) {
    rr.push_back(g.profile.r[k]);
    other.push_back(g.profile.p[1 - p.ColorOfPoint(k)][k]);
    cls.push_back(g.classification[k - 1] == PointClass::kD ? "D" : "S");
  }
  r.results["r"] = rr;
  r.results["p_other"] = other;
  r.results["classification"] = cls;
  r.results["z"] = g.z;
  Json bar = Json::array();
  for (const auto& [l, rt] : g.bar_pairs.pairs()) bar.push_back({l, rt});
  r.results["bar"] = {{"pairs", bar}, {"colors", g.bar_colors}};
  Json cycles = Json::array();
  for (size_t c = 0; c < g.cycles.size(); ++c) {
    cycles.push_back({{"vertices", g.cycles[c]}, {"inc_paths", g.inc_paths[c]}});
  }
  r.results["cycles"] = cycles;
  Json gamma = Json::object();
  for (const auto& [k, count] : g.gamma) gamma[std::to_string(k)] = count;
  r.results["gamma"] = gamma;
  r.results["exponent"] = g.TotalIncreasingPaths() - g.NumCycles();
  bool balanced = true;
  for (size_t c = 0; c < g.cycles.size(); ++c) {
    balanced &= g.inc_paths[c] == g.dec_paths[c];
  }
  r.CheckBool("increasing equals decreasing per cycle", balanced);
}

void RunEval(const Options& o, Report& r) {
  const ColoredPairPartition p = io::PartitionFromJson(io::LoadJson(o.partition));
  r.inputs = {{"t", o.t}, {"partition", io::PartitionToJson(p)}};
  Rational value;
  if (o.t == "tn") {
    r.inputs["N"] = o.n;
    value = TN(o.n, p);
    r.Check("t_N equals Thoma formula", Str(value),
            Str(TColored(ThomaN(o.n), p)));
  } else if (o.t == "thoma") {
    ThomaParameter<Rational> tp;
    tp.alpha = ParseRationalList(o.alpha);
    tp.beta = ParseRationalList(o.beta);
    tp.Validate();
    r.inputs["alpha"] = o.alpha;
    r.inputs["beta"] = o.beta;
    value = TColored(tp, p);
  } else if (o.t == "tensor") {
    r.inputs["N_minus"] = o.n_minus;
    r.inputs["N_plus"] = o.n_plus;
    value = TTensor(UncoloredByName("tn", o.n_minus),
                    UncoloredByName("tn", o.n_plus), p);
  } else {
    throw std::invalid_argument("--t must be thoma, tn or tensor");
  }
  r.results["value"] = Str(value);
}

void RunOracle(const Options& o, Report& r) {
  const Word w = io::WordFromJson(io::LoadJson(o.word));
  r.inputs = {{"word", io::WordToJson(w)}, {"N", o.n}};
  if (o.n < 0) throw UnsupportedError("the dense oracle requires N >= 1");
  const Rational dense = VacuumExpectationDense(w, o.n);
  const Rational comb = RhoN(w, o.n);
  r.results["dense"] = Str(dense);
  r.results["combinatorial"] = Str(comb);
  r.results["compatible"] = CompatiblePartitions(w).size();
  r.Check("dense equals combinatorial", Str(comb), Str(dense));
}

void RunCompare(const Options& o, Report& r) {
  std::vector<int> ns = o.ns.empty() ? std::vector<int>{2} : o.ns;
  r.inputs = {{"max_pairs", o.max_pairs}, {"N", ns}};
  Json matrix = Json::array();
  for (int m = 1; m <= o.max_pairs; ++m) {
    const auto parts = EnumerateColored(m, 2);
    for (int n : ns) {
      const auto ok = ParallelMap<char>(parts.size(), [&](size_t idx) -> char {
        const auto& p = parts[idx];
        const Rational tn = TN(n, p);
        return VacuumExpectationDense(CanonicalWord(p), n) == tn &&
               VacuumExpectationLambda(p, n) == tn &&
               TColored(ThomaN(n), p) == tn;
      });
      long passed = 0;
      for (char c : ok) passed += c;
      matrix.push_back({{"m", m},
                        {"N", n},
                        {"instances", parts.size()},
                        {"passed", passed}});
      r.Check("m=" + std::to_string(m) + " N=" + std::to_string(n),
              std::to_string(parts.size()), std::to_string(passed));
    }
  }
  r.results["matrix"] = matrix;
}

void RunClt(const Options& o, Report& r) {
  const QMatrix q = io::QMatrixFromJson(io::LoadJson(o.q));
  const ColoredPairPartition v = io::PartitionFromJson(io::LoadJson(o.v));
  std::vector<int> ns;
  {
    std::stringstream ss(o.n_list);
    std::string item;
    while (std::getline(ss, item, ',')) ns.push_back(std::stoi(item));
  }
  r.inputs = {{"t", o.t},
              {"N", o.n},
              {"V", io::PartitionToJson(v)},
              {"n", ns}};
  const auto curve = CltErrorCurve(UncoloredByName(o.t, o.n), q, v.base, ns);
  r.results["limit"] = Str(TQLimit(q, v.base));
  Json pts = Json::array();
  for (const CltPoint& c : curve) {
    pts.push_back({{"n", c.n}, {"value", Str(c.value)}, {"error", Str(c.error)}});
  }
  r.results["curve"] = pts;
  if (!curve.empty()) {
    r.CheckBool("final error <= first error",
                curve.back().error <= curve.front().error);
  }
}

void RunPdCheck(const Options& o, Report& r) {
  r.inputs = {{"t", o.t},
              {"N", o.n},
              {"colors", o.colors},
              {"max_points", o.max_points},
              {"left_legs_only", o.left_legs_only}};
  std::vector<BrokenPairPartition> family;
  for (int k = 0; k <= o.max_points; ++k) {
    for (auto& d : EnumerateBroken(k, o.colors, o.left_legs_only)) {
      family.push_back(std::move(d));
    }
  }
  TFunction t;
  if (o.t == "tn") {
    const int n = o.n;
    t = [n](const ColoredPairPartition& p) { return TN(n, p); };
  } else if (o.t == "qproduct") {
    r.inputs["q12"] = o.q12;
    std::vector<std::vector<Rational>> rows(o.colors,
                                            std::vector<Rational>(o.colors, 1));
    for (int i = 0; i < o.colors; ++i) {
      for (int j = 0; j < o.colors; ++j) {
        if (i != j) rows[i][j] = ParseRational(o.q12);
      }
    }
    const QMatrix q(rows);
    std::vector<UncoloredT> ts(o.colors, UncoloredByName("tn", o.n));
    t = [ts, q](const ColoredPairPartition& p) { return QProductEval(ts, q, p); };
  } else {
    throw std::invalid_argument("--t must be tn or qproduct");
  }
  const PsdResult res = GramPsdCheck(family, t);
  r.results["family_size"] = family.size();
  r.results["min_eigenvalue"] = Float17(res.min_eigenvalue);
  r.CheckBool("symmetric", res.symmetric);
  r.CheckBool("min eigenvalue >= -1e-9", res.pass);
}

void RunStirling(const Options& o, Report& r) {
  r.inputs = {{"N", o.n}};
  const StirlingResult s = StirlingCheck(o.n);
  r.results["value"] = Str(s.by_enumeration);
  r.results["pass"] = s.pass;
  r.Check("enumeration", "0", Str(s.by_enumeration));
  r.Check("Stirling numbers", "0", Str(s.by_stirling_numbers));
  r.Check("rising factorial", "0", Str(s.rising_factorial));
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Moments of two-colored generalized Brownian motions"};
  app.require_subcommand(1);
  Options o;
  std::function<void(const Options&, Report&)> run;
  std::string name;
  auto add = [&](const std::string& cmd, const std::string& help,
                 std::function<void(const Options&, Report&)> fn) {
    CLI::App* sub = app.add_subcommand(cmd, help);
    sub->callback([&, cmd, fn] {
      name = cmd;
      run = fn;
    });
    return sub;
  };

  auto* en = add("enumerate", "Enumerate colored pair partitions", RunEnumerate);
  en->add_option("--pairs", o.pairs, "Pair count m")->required();
  en->add_option("--colors", o.colors, "Color count k");
  en->add_flag("--list", o.list, "Emit every partition");

  auto* gr = add("graph", "Cycle-graph analysis of a two-colored partition",
                 RunGraph);
  gr->add_option("--partition", o.partition, "Partition JSON or file")
      ->required();

  auto* ev = add("eval", "Evaluate a t-function", RunEval);
  ev->add_option("--t", o.t, "thoma, tn or tensor");
  ev->add_option("--partition", o.partition, "Partition JSON or file")
      ->required();
  ev->add_option("--N", o.n, "Parameter of t_N");
  ev->add_option("--alpha", o.alpha, "Comma-separated alpha entries");
  ev->add_option("--beta", o.beta, "Comma-separated beta entries");
  ev->add_option("--N-minus", o.n_minus, "t_N parameter for color 0");
  ev->add_option("--N-plus", o.n_plus, "t_N parameter for color 1");

  auto* orc = add("oracle", "Vacuum expectation by operator application",
                  RunOracle);
  orc->add_option("--word", o.word, "Word JSON or file")->required();
  orc->add_option("--N", o.n, "Thoma parameter 1/N, 1 <= N <= 3");

  auto* cmp = add("compare", "Formula against oracle sweep", RunCompare);
  cmp->add_option("--max-pairs", o.max_pairs, "Largest m");
  cmp->add_option("--N", o.ns, "One or more N values")->delimiter(',');

  auto* clt = add("clt", "Central limit error curve", RunClt);
  clt->add_option("--Q", o.q, "Q matrix JSON or file")->required();
  clt->add_option("--V", o.v, "Partition JSON or file")->required();
  clt->add_option("--t", o.t, "free or tn");
  clt->add_option("--N", o.n, "Parameter when --t tn");
  clt->add_option("--n", o.n_list, "Comma-separated n values");

  auto* pd = add("pd-check", "Gram matrix positive semidefiniteness",
                 RunPdCheck);
  pd->add_option("--t", o.t, "tn or qproduct");
  pd->add_option("--N", o.n, "Parameter of t_N");
  pd->add_option("--colors", o.colors, "Color count");
  pd->add_option("--max-points", o.max_points, "Largest diagram size");
  pd->add_option("--q12", o.q12, "Off-diagonal q for qproduct");
  pd->add_flag("--left-legs-only", o.left_legs_only,
               "Restrict to diagrams without right legs");

  auto* st = add("stirling", "Stirling cancellation for negative N",
                 RunStirling);
  st->add_option("--N", o.n, "Negative integer")->required();

  std::vector<std::string> argv_store = {"gbm"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    run(o, report);
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const Json::exception& e) {
    err << "malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  Json doc = {{"subcommand", name},
              {"inputs", report.inputs},
              {"results", report.results},
              {"checks", report.checks},
              {"wall_time_s", secs}};
  out << doc.dump(2) << "\n";
  return report.AllPass() ? kExitOk : kExitChecksFailed;
}

}  // namespace gbm::cli
