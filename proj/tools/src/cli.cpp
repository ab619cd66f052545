#include "circtree/cli.hpp"

#include "circtree/closed_form.hpp"
#include "circtree/graph.hpp"
#include "circtree/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>
#include <variant>

namespace circtree::cli {

namespace {

using Json = nlohmann::ordered_json;
using Spec = std::variant<DirectedCirculantSpec, CyclePowerSpec>;

struct Options {
  std::string digraph;
  std::string cycle_power;
  std::string method;
  unsigned bits_start = PrecisionBudget{}.start_bits;
  unsigned bits_cap = PrecisionBudget{}.cap_bits;
  bool timing = false;

  // sweep / converge
  std::string digraph_family;
  std::string cycle_power_family;
  std::string n_range;
  std::string beta_range;
  unsigned jobs = 1;
  std::string target = "exp";

  // bench
  unsigned repeat = 3;

  PrecisionBudget budget() const {
    PrecisionBudget b{bits_start, bits_cap};
    b.validate();
    return b;
  }
};

struct MethodRun {
  std::string method;
  CertifiedCount result;
  double elapsed_ms = 0;
};

const std::vector<std::string> kDigraphMethods = {"theorem1", "theorem2", "betaproduct",
                                                  "matrix-tree", "eigenproduct"};
const std::vector<std::string> kCyclePowerMethods = {"cycle-power", "matrix-tree",
                                                     "eigenproduct"};

bool is_oracle(const std::string& method) {
  return method == "matrix-tree" || method == "eigenproduct";
}

std::int64_t vertex_count(const Spec& spec) {
  return std::visit([](const auto& s) { return s.vertex_count(); }, spec);
}

void guard_oracle(const Spec& spec) {
  const auto N = vertex_count(spec);
  if (N > kMaxOracleVertices) {
    throw InvalidSpec("oracle methods are limited to N <= " +
                      std::to_string(kMaxOracleVertices) + " vertices (this spec has N = " +
                      std::to_string(N) + ")");
  }
}

std::string default_method(const Spec& spec) {
  if (const auto* d = std::get_if<DirectedCirculantSpec>(&spec)) {
    return d->gammas.empty() ? "betaproduct" : "theorem1";
  }
  return "cycle-power";
}

std::vector<std::string> applicable_methods(const Spec& spec) {
  if (const auto* d = std::get_if<DirectedCirculantSpec>(&spec)) {
    std::vector<std::string> methods;
    for (const auto& m : kDigraphMethods) {
      if ((m == "theorem1" && d->gammas.empty()) || (m == "theorem2" && d->gammas.size() != 1)) {
        continue;
      }
      methods.push_back(m);
    }
    return methods;
  }
  return kCyclePowerMethods;
}

CertifiedCount exact_oracle(const TreeCount& count) { return {count, true, 0, std::nullopt}; }

CertifiedCount evaluate(const Spec& spec, const std::string& method,
                        const PrecisionBudget& budget) {
  if (is_oracle(method)) {
    guard_oracle(spec);
  }
  if (const auto* d = std::get_if<DirectedCirculantSpec>(&spec)) {
    if (method == "theorem1") return theorem1_count(*d, budget);
    if (method == "theorem2") return theorem2_count(*d, budget);
    if (method == "betaproduct") return betaproduct_count(*d, budget);
    if (method == "matrix-tree") return exact_oracle(tau_directed(reduce_to_instance(*d)));
    if (method == "eigenproduct") return eigenproduct_count(reduce_to_instance(*d), budget);
    throw InvalidSpec("method '" + method + "' does not apply to --digraph");
  }
  const auto& c = std::get<CyclePowerSpec>(spec);
  if (method == "cycle-power") return cycle_power_count(c, budget);
  if (method == "matrix-tree") return exact_oracle(tau_undirected(cycle_power_instance(c)));
  if (method == "eigenproduct") return eigenproduct_count(cycle_power_instance(c), budget);
  throw InvalidSpec("method '" + method + "' does not apply to --cycle-power");
}

MethodRun timed(const Spec& spec, const std::string& method, const PrecisionBudget& budget) {
  const auto start = std::chrono::steady_clock::now();
  CertifiedCount result = evaluate(spec, method, budget);
  const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - start;
  return {method, std::move(result), elapsed.count()};
}

Json spec_json(const Spec& spec) {
  Json j;
  if (const auto* d = std::get_if<DirectedCirculantSpec>(&spec)) {
    j["family"] = "digraph";
    j["beta"] = d->beta;
    j["n"] = d->n;
    j["p"] = d->p;
    j["gammas"] = d->gammas;
  } else {
    const auto& c = std::get<CyclePowerSpec>(spec);
    j["family"] = "cycle-power";
    j["beta"] = c.beta;
    j["n"] = c.n;
    j["variant"] = to_string(c.variant);
  }
  j["vertices"] = vertex_count(spec);
  return j;
}

Json run_json(const MethodRun& run, bool timing) {
  Json j;
  j["method"] = run.method;
  j["count"] = run.result.count.to_string();
  j["certified"] = run.result.certified;
  j["bits_used"] = run.result.bits_used;
  if (run.result.zero_reason) {
    j["reason"] = to_string(*run.result.zero_reason);
  }
  if (timing) {
    j["elapsed_ms"] = run.elapsed_ms;
  }
  return j;
}

Spec single_spec(const Options& o) {
  const bool digraph = !o.digraph.empty();
  const bool cycle = !o.cycle_power.empty();
  if (digraph == cycle) {
    throw InvalidSpec("give exactly one of --digraph or --cycle-power");
  }
  if (digraph) {
    return parse_digraph(o.digraph);
  }
  return parse_cycle_power(o.cycle_power);
}

int cmd_count(const Options& o, std::ostream& out) {
  const Spec spec = single_spec(o);
  const std::string method = o.method.empty() ? default_method(spec) : o.method;
  const MethodRun run = timed(spec, method, o.budget());
  Json j;
  j["spec"] = spec_json(spec);
  const Json fields = run_json(run, o.timing);
  for (const auto& [key, value] : fields.items()) {
    j[key] = value;
  }
  out << j.dump() << '\n';
  return kSuccess;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const Spec spec = single_spec(o);
  guard_oracle(spec);
  const auto budget = o.budget();
  Json methods = Json::array();
  std::optional<TreeCount> first;
  bool agree = true;
  for (const auto& method : applicable_methods(spec)) {
    const MethodRun run = timed(spec, method, budget);
    if (!first) {
      first = run.result.count;
    } else if (!(*first == run.result.count)) {
      agree = false;
    }
    methods.push_back(run_json(run, o.timing));
  }
  Json j;
  j["spec"] = spec_json(spec);
  j["methods"] = methods;
  j["agree"] = agree;
  out << j.dump() << '\n';
  return agree ? kSuccess : kDisagreement;
}

// Runs `cells` on up to `jobs` threads; results keep input order. The first
// failure (in input order) is rethrown.
template <class Result>
std::vector<Result> run_cells(std::size_t count, unsigned jobs,
                              const std::function<Result(std::size_t)>& cell) {
  std::vector<std::optional<Result>> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = cell(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }
  std::vector<Result> ordered;
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) {
      std::rethrow_exception(errors[i]);
    }
    ordered.push_back(std::move(*results[i]));
  }
  return ordered;
}

std::vector<Spec> family_specs(const Options& o) {
  const bool digraph = !o.digraph_family.empty();
  if (digraph == !o.cycle_power_family.empty()) {
    throw InvalidSpec("give exactly one of --digraph-family or --cycle-power-family");
  }
  const FamilyTemplate family = parse_family(digraph ? o.digraph_family : o.cycle_power_family);
  if (o.n_range.empty()) {
    throw InvalidSpec("--n is required");
  }
  const auto ns = parse_range(o.n_range);
  std::vector<std::int64_t> betas{0};
  if (family.uses_beta()) {
    if (o.beta_range.empty()) {
      throw InvalidSpec("the family uses 'b'; give --beta");
    }
    betas = parse_range(o.beta_range);
  } else if (!o.beta_range.empty()) {
    throw InvalidSpec("--beta given but the family has no 'b' placeholder");
  }
  std::vector<Spec> specs;
  for (auto beta : betas) {
    for (auto n : ns) {
      if (digraph) {
        specs.emplace_back(family.digraph(beta, n));
      } else {
        specs.emplace_back(family.cycle_power(beta, n));
      }
    }
  }
  return specs;
}

std::string join_gammas(const std::vector<std::int64_t>& gammas) {
  std::string s;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    s += (i ? ";" : "") + std::to_string(gammas[i]);
  }
  return s;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto specs = family_specs(o);
  const auto budget = o.budget();
  const bool digraph = std::holds_alternative<DirectedCirculantSpec>(specs.front());
  const auto runs = run_cells<MethodRun>(specs.size(), o.jobs, [&](std::size_t i) {
    const std::string method = o.method.empty() ? default_method(specs[i]) : o.method;
    return timed(specs[i], method, budget);
  });

  out << (digraph ? "beta,n,p,gammas" : "beta,n,variant")
      << ",method,count,certified,bits_used" << (o.timing ? ",elapsed_ms" : "") << '\n';
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (const auto* d = std::get_if<DirectedCirculantSpec>(&specs[i])) {
      out << d->beta << ',' << d->n << ',' << d->p << ',' << join_gammas(d->gammas);
    } else {
      const auto& c = std::get<CyclePowerSpec>(specs[i]);
      out << c.beta << ',' << c.n << ',' << to_string(c.variant);
    }
    const auto& r = runs[i];
    out << ',' << r.method << ',' << r.result.count.to_string() << ','
        << (r.result.certified ? "true" : "false") << ',' << r.result.bits_used;
    if (o.timing) {
      out << ',' << r.elapsed_ms;
    }
    out << '\n';
  }
  return kSuccess;
}

std::string format_real(const Ball& value) {
  char buffer[64];
  mpfr_snprintf(buffer, sizeof buffer, "%.15Rg", value.mid().get());
  return buffer;
}

int cmd_converge(const Options& o, std::ostream& out) {
  if (o.cycle_power_family.empty() || !o.digraph_family.empty()) {
    throw InvalidSpec("converge needs --cycle-power-family");
  }
  const auto specs = family_specs(o);
  const auto budget = o.budget();
  const auto counts = run_cells<CertifiedCount>(specs.size(), o.jobs, [&](std::size_t i) {
    return cycle_power_count(std::get<CyclePowerSpec>(specs[i]), budget);
  });
  constexpr mpfr_prec_t prec = 256;
  const bool beta_column = !o.beta_range.empty();
  out << (beta_column ? "beta," : "") << "n,ratio,target,relative_error\n";
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& c = std::get<CyclePowerSpec>(specs[i]);
    const Ball ratio = Ball::from_rational(asymptotic_ratio(counts[i].count, c.beta, c.n), prec);
    const Ball target = o.target == "corrected"
                            ? corrected_asymptotic_limit(c.beta, c.variant, prec)
                            : asymptotic_limit(c.beta, c.variant, prec);
    const Ball error = abs(ratio / target - Ball::from_integer(1L, prec));
    if (beta_column) {
      out << c.beta << ',';
    }
    out << c.n << ',' << format_real(ratio) << ',' << format_real(target) << ','
        << format_real(error) << '\n';
  }
  return kSuccess;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const Spec spec = single_spec(o);
  const auto budget = o.budget();
  const unsigned repeat = std::max(1u, o.repeat);
  Json results = Json::array();
  for (const auto& method : applicable_methods(spec)) {
    Json entry;
    entry["method"] = method;
    if (is_oracle(method) && vertex_count(spec) > kMaxOracleVertices) {
      entry["skipped"] = "N exceeds the oracle limit of " + std::to_string(kMaxOracleVertices);
      results.push_back(entry);
      continue;
    }
    double best = 0;
    std::size_t digits = 0;
    for (unsigned r = 0; r < repeat; ++r) {
      const MethodRun run = timed(spec, method, budget);
      best = r == 0 ? run.elapsed_ms : std::min(best, run.elapsed_ms);
      digits = run.result.count.digits();
    }
    entry["count_digits"] = digits;
    entry["best_ms"] = best;
    results.push_back(entry);
  }
  Json j;
  j["spec"] = spec_json(spec);
  j["repeat"] = repeat;
  j["results"] = results;
  out << j.dump() << '\n';
  return kSuccess;
}

void add_spec_flags(CLI::App* cmd, Options& o, bool with_method) {
  cmd->add_option("--digraph", o.digraph, "directed circulant: beta,n,p[,gamma...]");
  cmd->add_option("--cycle-power", o.cycle_power, "cycle power: beta,n,{n|n-1}");
  if (with_method) {
    cmd->add_option("--method", o.method,
                    "theorem1, theorem2, betaproduct, cycle-power, matrix-tree, eigenproduct");
  }
}

void add_budget_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--bits-start", o.bits_start, "initial working precision in bits");
  cmd->add_option("--bits-cap", o.bits_cap, "largest working precision tried");
}

void add_family_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--digraph-family", o.digraph_family,
                  "template such as 3,n,3,2 or b,n,1,1 ('b' needs --beta)");
  cmd->add_option("--cycle-power-family", o.cycle_power_family,
                  "template such as 3,n or b,n,n-1");
  cmd->add_option("--n", o.n_range, "values of n: 1..6 or 50,100,200")->required();
  cmd->add_option("--beta", o.beta_range, "values substituted for 'b'");
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spanning-tree counts of circulant digraphs and cycle powers"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "count with one method (JSON)");
  add_spec_flags(count, o, true);
  add_budget_flags(count, o);
  count->add_flag("--timing", o.timing, "include elapsed_ms");

  auto* compare = app.add_subcommand("compare", "run every applicable method (JSON)");
  add_spec_flags(compare, o, false);
  add_budget_flags(compare, o);
  compare->add_flag("--timing", o.timing, "include elapsed_ms");

  auto* sweep = app.add_subcommand("sweep", "count over a family (CSV)");
  add_family_flags(sweep, o);
  sweep->add_option("--method", o.method, "method applied to every cell");
  add_budget_flags(sweep, o);
  sweep->add_flag("--timing", o.timing, "include elapsed_ms");

  auto* converge = app.add_subcommand("converge", "asymptotic ratio table (CSV)");
  add_family_flags(converge, o);
  converge
      ->add_option("--target", o.target,
                   "exp: e^{+-beta/2}; corrected: the limit with the phase shift kept")
      ->check(CLI::IsMember({"exp", "corrected"}));
  add_budget_flags(converge, o);

  auto* bench = app.add_subcommand("bench", "time every applicable method (JSON)");
  add_spec_flags(bench, o, false);
  add_budget_flags(bench, o);
  bench->add_option("--repeat", o.repeat, "runs per method; the best is reported");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  try {
    if (count->parsed()) return cmd_count(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (converge->parsed()) return cmd_converge(o, out);
    return cmd_bench(o, out);
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kPrecisionExhausted;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace circtree::cli
