// main.cpp — `sunmult` command line: multiplicity queries, coupling
// enumeration, cone membership, verification sweeps, and timing tables.
// SPDX-License-Identifier: MIT
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sunmult/four_point.hpp"
#include "sunmult/n_point.hpp"
#include "sunmult/oracle.hpp"
#include "sunmult/three_point.hpp"
#include "sunmult/triangle.hpp"
#include "sunmult/weights.hpp"

namespace {

using nlohmann::json;
using namespace sunmult;

constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

double elapsed_us(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Parses the weight list and reconciles it with an optional --rank value.
std::vector<Weight> parse_query(const std::string& text, int rank_flag) {
  std::vector<Weight> ws = parse_weight_list(text);
  if (rank_flag > 0 && ws.front().rank() != rank_flag)
    throw std::invalid_argument("--rank disagrees with the weight lengths");
  return ws;
}

json weights_json(const std::vector<Weight>& ws) {
  json arr = json::array();
  for (const Weight& w : ws) arr.push_back(w.labels);
  return arr;
}

// One channel term of the top-level fold for explain output.
struct FoldTerm {
  Weight rho;
  long long left = 0;
  long long right = 0;
  long long product = 0;
};

std::vector<FoldTerm> fold_terms(const std::vector<Weight>& ws) {
  std::vector<FoldTerm> terms;
  if (!root_lattice_check(ws)) return terms;
  for (const Weight& rho : dominant_weights_below(ws[0] + ws[1])) {
    const long long left = multiplicity3(ws[0], ws[1], conjugate(rho));
    if (left == 0) continue;
    CouplingQuery rest;
    rest.rank = ws.front().rank();
    rest.weights.push_back(rho);
    rest.weights.insert(rest.weights.end(), ws.begin() + 2, ws.end());
    const long long right =
        rest.points() == 3
            ? multiplicity3(rest.weights[0], rest.weights[1], rest.weights[2])
            : multiplicity_n(rest);
    if (right == 0) continue;
    terms.push_back(FoldTerm{rho, left, right, left * right});
  }
  return terms;
}

long long run_method(const std::string& method, const std::vector<Weight>& ws) {
  const int n = static_cast<int>(ws.size());
  if (method == "oracle") return singlet_count(ws);
  if (method == "channel") {
    CouplingQuery q{ws.front().rank(), ws};
    return multiplicity_n(q);  // folds channels; degenerates to the triangle
                               // count for three weights
  }
  // polytope: the direct geometric count
  if (n == 3) return multiplicity3(ws[0], ws[1], ws[2]);
  if (n == 4) return multiplicity4(ws[0], ws[1], ws[2], ws[3]);
  CouplingQuery q{ws.front().rank(), ws};
  return diagram_count_n(q);  // throws past its scale limits
}

int cmd_mult(const std::string& weights_text, int rank_flag,
             std::vector<std::string> methods, bool explain, bool json_out) {
  const std::vector<Weight> ws = parse_query(weights_text, rank_flag);
  if (ws.size() < 3) throw std::invalid_argument("need at least three weights");

  if (methods.empty()) methods.push_back(ws.size() <= 4 ? "polytope" : "channel");
  std::vector<long long> values;
  for (const std::string& m : methods) values.push_back(run_method(m, ws));
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] != values[0]) {
      std::cerr << "error: methods disagree: " << methods[0] << "=" << values[0] << " "
                << methods[k] << "=" << values[k] << "\n";
      return kExitMismatch;
    }

  std::string method_label = methods[0];
  for (std::size_t k = 1; k < methods.size(); ++k) method_label += "+" + methods[k];

  std::vector<FoldTerm> terms;
  if (explain && ws.size() >= 4) terms = fold_terms(ws);

  if (json_out) {
    json out;
    out["rank"] = ws.front().rank();
    out["weights"] = weights_json(ws);
    out["multiplicity"] = values[0];
    out["method"] = method_label;
    if (explain && ws.size() >= 4) {
      json breakdown = json::array();
      for (const FoldTerm& t : terms)
        breakdown.push_back(json{{"rho", t.rho.labels},
                                 {"left", t.left},
                                 {"right", t.right},
                                 {"product", t.product}});
      out["breakdown"] = breakdown;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (explain) {
    if (ws.size() == 3)
      std::cout << "three weights couple directly; no intermediate channel\n";
    for (const FoldTerm& t : terms)
      std::cout << "rho=(" << format_weight(t.rho) << ") left=" << t.left
                << " right=" << t.right << " product=" << t.product << "\n";
  }
  std::cout << values[0] << "\n";
  return 0;
}

int cmd_enumerate(const std::string& weights_text, int rank_flag, bool show_entries) {
  const std::vector<Weight> ws = parse_query(weights_text, rank_flag);
  long long count = 0;
  if (ws.size() == 3) {
    const std::vector<CoefficientVector3> all = enumerate3(ws[0], ws[1], ws[2]);
    for (const CoefficientVector3& cv : all) {
      std::cout << "# " << ++count << ":";
      for (const auto& [ij, value] : cv.v)
        std::cout << " v[" << ij.first << "," << ij.second << "]=" << value;
      std::cout << "\n";
      if (show_entries) std::cout << to_text(reconstruct_triangle(ws[0], ws[1], ws[2], cv));
    }
  } else if (ws.size() == 4) {
    const std::vector<CoefficientVector4> all = enumerate4(ws[0], ws[1], ws[2], ws[3]);
    for (const CoefficientVector4& cv : all) {
      std::cout << "# " << ++count << ":";
      for (const auto& [ij, value] : cv.v1)
        std::cout << " v1[" << ij.first << "," << ij.second << "]=" << value;
      for (std::size_t i = 0; i < cv.g.size(); ++i)
        std::cout << " g[" << i + 1 << "]=" << cv.g[i];
      for (const auto& [ij, value] : cv.v2)
        std::cout << " v2[" << ij.first << "," << ij.second << "]=" << value;
      std::cout << "\n";
      if (show_entries)
        std::cout << to_text(reconstruct_diagram(ws[0], ws[1], ws[2], ws[3], cv));
    }
  } else {
    throw std::invalid_argument("enumerate supports three or four weights");
  }
  std::cout << "count: " << count << "\n";
  return 0;
}

int cmd_cone(const std::string& weights_text, int rank_flag, bool json_out) {
  const std::vector<Weight> ws = parse_query(weights_text, rank_flag);
  if (ws.size() != 4) throw std::invalid_argument("cone takes exactly four weights");
  const int r = ws.front().rank();
  ConeReport rep;
  if (r == 1)
    rep = cone_su2(ws[0].label(1), ws[1].label(1), ws[2].label(1), ws[3].label(1));
  else if (r == 2)
    rep = cone_su3(ws[0], ws[1], ws[2], ws[3]);
  else
    throw std::invalid_argument("cone supports rank 1 and rank 2 only");

  if (json_out) {
    json out;
    out["member"] = rep.member;
    out["violated"] = rep.violated;
    out["S_numerators"] = rep.S_numerators;
    out["S_denominator"] = rep.S_denominator;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "member: " << (rep.member ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < rep.S_numerators.size(); ++i)
    std::cout << "S" << (rep.S_numerators.size() > 1 ? std::to_string(i + 1) : "") << " = "
              << rep.S_numerators[i] << "/" << rep.S_denominator << "\n";
  for (const std::string& v : rep.violated) std::cout << "violated: " << v << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify: exhaustive sweeps comparing every computational route.
// ---------------------------------------------------------------------------

struct SweepPlan {
  int points;
  int rank;
  long long labels;
};

struct SweepOutcome {
  long long tuples = 0;
  long long mismatches = 0;
  long long first_index = -1;
  std::string first_message;
};

std::vector<Weight> weights_up_to(int rank, long long bound) {
  std::vector<Weight> all;
  Weight w;
  w.labels.assign(rank, 0);
  while (true) {
    all.push_back(w);
    int i = rank - 1;
    while (i >= 0 && w.labels[i] == bound) w.labels[i--] = 0;
    if (i < 0) break;
    ++w.labels[i];
  }
  return all;
}

// Compares all routes on one tuple; empty result means agreement.
std::optional<std::string> check_tuple(const std::vector<Weight>& ws) {
  const int r = ws.front().rank();
  std::vector<std::pair<std::string, long long>> vals;
  if (ws.size() == 3) {
    vals.emplace_back("polytope", multiplicity3(ws[0], ws[1], ws[2]));
    vals.emplace_back("oracle", singlet_count(ws));
  } else {
    vals.emplace_back("polytope", multiplicity4(ws[0], ws[1], ws[2], ws[3]));
    vals.emplace_back("channel", channel_decompose4(ws[0], ws[1], ws[2], ws[3]).total);
    vals.emplace_back("oracle", singlet_count(ws));
    if (r == 1)
      vals.emplace_back("closed",
                        multiplicity4_su2(ws[0].label(1), ws[1].label(1), ws[2].label(1),
                                          ws[3].label(1)));
    if (r == 2) vals.emplace_back("closed", multiplicity4_su3(ws[0], ws[1], ws[2], ws[3]));
    if (r == 3) vals.emplace_back("closed", multiplicity4_su4(ws[0], ws[1], ws[2], ws[3]));
  }
  for (std::size_t k = 1; k < vals.size(); ++k)
    if (vals[k].second != vals[0].second) {
      std::ostringstream msg;
      msg << "weights=" << format_weight_list(ws);
      for (const auto& [name, value] : vals) msg << " " << name << "=" << value;
      return msg.str();
    }
  return std::nullopt;
}

SweepOutcome run_sweep(const SweepPlan& plan, int jobs) {
  const std::vector<Weight> alphabet = weights_up_to(plan.rank, plan.labels);
  const long long n = static_cast<long long>(alphabet.size());
  long long total = 1;
  for (int p = 0; p < plan.points; ++p) total *= n;

  SweepOutcome outcome;
  outcome.tuples = total;

  std::atomic<long long> next{0};
  std::mutex merge_mutex;
  auto worker = [&]() {
    SweepOutcome local;
    const long long chunk = 256;
    while (true) {
      const long long begin = next.fetch_add(chunk);
      if (begin >= total) break;
      const long long end = std::min(total, begin + chunk);
      for (long long index = begin; index < end; ++index) {
        std::vector<Weight> ws;
        long long rest = index;
        for (int p = 0; p < plan.points; ++p) {
          ws.push_back(alphabet[rest % n]);
          rest /= n;
        }
        if (const auto msg = check_tuple(ws)) {
          ++local.mismatches;
          if (local.first_index < 0 || index < local.first_index) {
            local.first_index = index;
            local.first_message = *msg;
          }
        }
      }
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    outcome.mismatches += local.mismatches;
    if (local.first_index >= 0 &&
        (outcome.first_index < 0 || local.first_index < outcome.first_index)) {
      outcome.first_index = local.first_index;
      outcome.first_message = local.first_message;
    }
  };

  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return outcome;
}

int cmd_verify(int rank, long long labels, int points, int jobs,
               std::optional<unsigned long long> seed) {
  std::vector<SweepPlan> plans;
  if (rank > 0 || labels > 0 || points > 0) {
    if (rank <= 0 || labels < 0 || points < 3)
      throw std::invalid_argument("custom sweeps need --rank, --labels and --points");
    plans.push_back(SweepPlan{points, rank, labels});
  } else {
    plans = {{3, 1, 10}, {3, 2, 4}, {3, 3, 2}, {4, 1, 8}, {4, 2, 3}, {4, 3, 2}};
  }
  if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  long long total_mismatches = 0;
  std::string first_message;
  for (const SweepPlan& plan : plans) {
    const auto t0 = std::chrono::steady_clock::now();
    const SweepOutcome outcome = run_sweep(plan, jobs);
    std::cout << "sweep points=" << plan.points << " rank=" << plan.rank
              << " labels<=" << plan.labels << ": " << outcome.tuples
              << " tuples, mismatches: " << outcome.mismatches << " ("
              << elapsed_us(t0) / 1e6 << " s)\n";
    total_mismatches += outcome.mismatches;
    if (first_message.empty() && !outcome.first_message.empty())
      first_message = outcome.first_message;
  }

  if (seed) {
    std::mt19937_64 rng(*seed);
    long long perm_mismatches = 0;
    const int checks = 64;
    for (int c = 0; c < checks; ++c) {
      const SweepPlan& plan = plans[rng() % plans.size()];
      const std::vector<Weight> alphabet = weights_up_to(plan.rank, plan.labels);
      std::vector<Weight> ws;
      for (int p = 0; p < plan.points; ++p) ws.push_back(alphabet[rng() % alphabet.size()]);
      std::vector<Weight> shuffled = ws;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CouplingQuery a{plan.rank, ws}, b{plan.rank, shuffled};
      if (multiplicity_n(a) != multiplicity_n(b)) {
        ++perm_mismatches;
        if (first_message.empty())
          first_message = "permuted weights=" + format_weight_list(ws);
      }
    }
    std::cout << "permutation spot-checks: " << checks
              << ", mismatches: " << perm_mismatches << "\n";
    total_mismatches += perm_mismatches;
  }

  std::cout << "total mismatches: " << total_mismatches << "\n";
  if (total_mismatches > 0) {
    std::cerr << "first mismatch: " << first_message << "\n";
    return kExitMismatch;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bench: scaling families timed across the three routes.
// ---------------------------------------------------------------------------

struct BenchRow {
  std::string family;
  int k;
  long long size;
  long long multiplicity;
  double polytope_us;
  double box_us;
  double oracle_us;
};

BenchRow bench_point(const std::string& family, int k) {
  std::vector<Weight> ws;
  bool dumb_box = true;
  if (family == "su2-quartet") {
    ws.assign(4, Weight{{k}});
    dumb_box = true;
  } else if (family == "su3-diagonal") {
    ws.assign(3, Weight{{k, k}});
  } else if (family == "su3-quartet") {
    ws.assign(4, Weight{{k, k}});
    dumb_box = false;  // the plain scan is exponential in the four coordinates
  } else if (family == "su4-diagonal") {
    ws.assign(3, Weight{{k, 0, k}});  // keeps every point on the root lattice
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }

  BenchRow row;
  row.family = family;
  row.k = k;
  row.size = dim(ws.front());

  auto t0 = std::chrono::steady_clock::now();
  if (ws.size() == 3)
    row.multiplicity = count_points(three_point_bounds(ws[0], ws[1], ws[2])).count;
  else
    row.multiplicity = count_points(four_point_bounds(ws[0], ws[1], ws[2], ws[3])).count;
  row.polytope_us = elapsed_us(t0);

  t0 = std::chrono::steady_clock::now();
  long long box = ws.size() == 3 ? multiplicity3_box(ws[0], ws[1], ws[2])
                                 : multiplicity4_box(ws[0], ws[1], ws[2], ws[3], !dumb_box);
  row.box_us = elapsed_us(t0);

  t0 = std::chrono::steady_clock::now();
  const long long oracle = singlet_count(ws);
  row.oracle_us = elapsed_us(t0);

  if (box != row.multiplicity || oracle != row.multiplicity)
    throw std::logic_error("bench routes disagree on " + family + " k=" +
                           std::to_string(k));
  return row;
}

int cmd_bench(const std::string& family, int kmax, bool json_out) {
  std::vector<BenchRow> rows;
  for (int k = 1; k <= kmax; ++k) rows.push_back(bench_point(family, k));

  if (json_out) {
    json out = json::array();
    for (const BenchRow& r : rows)
      out.push_back(json{{"family", r.family},
                         {"k", r.k},
                         {"size", r.size},
                         {"multiplicity", r.multiplicity},
                         {"polytope_us", r.polytope_us},
                         {"box_us", r.box_us},
                         {"oracle_us", r.oracle_us}});
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "family,k,size,multiplicity,polytope_us,box_us,oracle_us\n";
  for (const BenchRow& r : rows)
    std::cout << r.family << "," << r.k << "," << r.size << "," << r.multiplicity << ","
              << r.polytope_us << "," << r.box_us << "," << r.oracle_us << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"su(r+1) tensor-product multiplicity calculator"};
  app.require_subcommand(1);

  std::string weights_text;
  int rank_flag = 0;
  std::vector<std::string> methods;
  bool explain = false, json_out = false, show_entries = false;

  CLI::App* mult = app.add_subcommand("mult", "multiplicity of the singlet in a product");
  mult->add_option("weights", weights_text, "weights as \"a,b,...;a,b,...\"")->required();
  mult->add_option("--rank", rank_flag, "expected rank (checked against the weights)");
  mult->add_option("--method", methods,
                   "computational route; repeat to cross-check (disagreement exits 3)")
      ->check(CLI::IsMember({"polytope", "oracle", "channel"}));
  mult->add_flag("--explain", explain, "print the intermediate-channel breakdown");
  mult->add_flag("--json", json_out, "JSON output");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list all couplings one by one");
  enumerate->add_option("weights", weights_text, "three or four weights")->required();
  enumerate->add_option("--rank", rank_flag, "expected rank");
  enumerate->add_flag("--entries", show_entries, "print the reconstructed entry rows");

  CLI::App* cone = app.add_subcommand("cone", "non-vanishing cone membership (rank 1-2)");
  cone->add_option("weights", weights_text, "exactly four weights")->required();
  cone->add_option("--rank", rank_flag, "expected rank");
  cone->add_flag("--json", json_out, "JSON output");

  int v_rank = 0, v_points = 0, v_jobs = 0;
  long long v_labels = -1;
  unsigned long long v_seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "exhaustive route-agreement sweeps");
  verify->add_option("--rank", v_rank, "sweep rank (with --labels and --points)");
  verify->add_option("--labels", v_labels, "label bound for a custom sweep");
  verify->add_option("--points", v_points, "number of weights for a custom sweep");
  verify->add_option("--jobs", v_jobs, "worker threads (default: all cores)");
  CLI::Option* seed_opt =
      verify->add_option("--seed", v_seed, "run seeded random permutation spot-checks");

  std::string b_family = "su3-diagonal";
  int b_kmax = 6;
  CLI::App* bench = app.add_subcommand("bench", "scaling-family timings as CSV");
  bench->add_option("--family", b_family, "su2-quartet, su3-diagonal, su3-quartet or su4-diagonal");
  bench->add_option("--kmax", b_kmax, "largest scale parameter");
  bench->add_flag("--json", json_out, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (mult->parsed()) return cmd_mult(weights_text, rank_flag, methods, explain, json_out);
    if (enumerate->parsed()) return cmd_enumerate(weights_text, rank_flag, show_entries);
    if (cone->parsed()) return cmd_cone(weights_text, rank_flag, json_out);
    if (verify->parsed())
      return cmd_verify(v_rank, v_labels, v_points, v_jobs,
                        seed_opt->count() ? std::optional<unsigned long long>(v_seed)
                                          : std::nullopt);
    if (bench->parsed()) return cmd_bench(b_family, b_kmax, json_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
