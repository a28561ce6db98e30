// Command-line front end. Talks to the library only through the C interface.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "intervallabel/intervallabel.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

// Raised for anything that should end the run with kExitUsage.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceDeleter {
  void operator()(il_instance* p) const { il_instance_free(p); }
};
struct LabelingDeleter {
  void operator()(il_labeling* p) const { il_labeling_free(p); }
};
using InstancePtr = std::unique_ptr<il_instance, InstanceDeleter>;
using LabelingPtr = std::unique_ptr<il_labeling, LabelingDeleter>;

void check(il_status status, const std::string& context) {
  if (status == IL_OK) return;
  std::string msg = context + ": " + il_status_name(status) + ": " + il_last_error();
  throw CliError(msg);
}

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  il_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError("cannot write " + path);
  out << text;
  if (!out) throw CliError("write failed for " + path);
}

InstancePtr load_instance(const std::string& path) {
  il_instance* raw = nullptr;
  check(il_instance_parse(read_file(path).c_str(), &raw), path);
  return InstancePtr(raw);
}

LabelingPtr load_labeling(const std::string& path) {
  il_labeling* raw = nullptr;
  check(il_labeling_parse(read_file(path).c_str(), &raw), path);
  return LabelingPtr(raw);
}

LabelingPtr run_labeler(const il_instance* inst, int p, int q) {
  il_labeling* raw = nullptr;
  check(il_label(inst, p, q, &raw), "label");
  return LabelingPtr(raw);
}

std::string instance_class(const il_instance* inst) {
  const char* name = nullptr;
  check(il_instance_class(inst, &name), "class");
  return name;
}

struct GenOptions {
  std::string cls;
  int n = 0;
  int k = 3;
  std::int64_t circumference = 0;
  std::int64_t max_length = 0;
  std::vector<std::int64_t> endpoint_range;

  il_gen_params params() const {
    il_gen_params gp;
    il_gen_params_default(&gp);
    gp.k = k;
    gp.circumference = circumference;
    gp.max_length = max_length;
    if (endpoint_range.size() == 2) {
      gp.range_lo = endpoint_range[0];
      gp.range_hi = endpoint_range[1];
      if (gp.range_hi < gp.range_lo) throw CliError("--endpoint-range: A must not exceed B");
    }
    return gp;
  }
};

void add_gen_options(CLI::App* cmd, GenOptions& g) {
  cmd->add_option("--n", g.n, "Vertices per instance")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--k", g.k, "Class count (interval_k)");
  cmd->add_option("--circumference", g.circumference, "Circle length (circular_arc)");
  cmd->add_option("--max-length", g.max_length, "Longest interval/arc (0 = unbounded)");
  cmd->add_option("--endpoint-range", g.endpoint_range, "Endpoint range A B")->expected(2);
}

InstancePtr generate(const std::string& cls, const GenOptions& g, std::uint64_t seed) {
  il_instance* raw = nullptr;
  const il_gen_params gp = g.params();
  check(il_instance_generate(cls.c_str(), g.n, seed, &gp, &raw), "gen");
  return InstancePtr(raw);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("INTERVALLABEL_SEED")) {
    try {
      std::size_t pos = 0;
      std::uint64_t s = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return s;
    } catch (const std::exception&) {
    }
    throw CliError("INTERVALLABEL_SEED is not an unsigned integer");
  }
  throw CliError("a seed is required: pass --seed or set INTERVALLABEL_SEED");
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Callers write
// results into per-index slots so output order never depends on scheduling.
template <typename F>
void parallel_for(std::size_t count, int jobs, F&& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors(count);
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (!e.empty()) throw CliError(e);
}

// ---------------------------------------------------------------------------

int cmd_gen(const GenOptions& g, int count, std::optional<std::uint64_t> seed_flag,
            const std::string& out_dir) {
  const std::uint64_t seed = resolve_seed(seed_flag);
  std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw CliError("cannot create " + dir.string() + ": " + ec.message());
  for (int i = 0; i < count; ++i) {
    auto inst = generate(g.cls, g, seed + static_cast<std::uint64_t>(i));
    char* text = nullptr;
    check(il_instance_serialize(inst.get(), &text), "serialize");
    auto path = dir / (g.cls + "-" + std::to_string(seed) + "-" + std::to_string(i) + ".json");
    write_output(path.string(), take(text));
  }
  return kExitOk;
}

int cmd_label(const std::string& in, int p, int q, int omega_cap, const std::string& out,
              const std::string& report_path) {
  auto inst = load_instance(in);
  auto lab = run_labeler(inst.get(), p, q);
  char* text = nullptr;
  check(il_labeling_serialize(lab.get(), &text), "serialize");
  write_output(out, take(text));

  char* report = nullptr;
  int hard = 0;
  check(il_bound_report(inst.get(), lab.get(), omega_cap, &report, &hard), "bound report");
  json arr = json::array({json::parse(take(report))});
  if (report_path.empty()) std::cerr << arr.dump(2) << "\n";
  else write_output(report_path, arr.dump(2) + "\n");
  return hard ? kExitViolation : kExitOk;
}

int cmd_check(const std::string& in, const std::string& labeling_path, int p, int q,
              const std::string& variant, int omega_cap, const std::string& out) {
  auto inst = load_instance(in);
  auto lab = labeling_path.empty() ? run_labeler(inst.get(), p, q) : load_labeling(labeling_path);

  std::size_t count = 0;
  char* violations = nullptr;
  check(il_validate(inst.get(), lab.get(), variant.c_str(), &count, &violations), "validate");
  char* report = nullptr;
  int hard = 0;
  check(il_bound_report(inst.get(), lab.get(), omega_cap, &report, &hard), "bound report");

  json rec = json::parse(take(report));
  rec["variant"] = variant;
  rec["violation_count"] = count;
  rec["violations"] = json::parse(take(violations));
  write_output(out, json::array({rec}).dump(2) + "\n");
  return (count > 0 || hard) ? kExitViolation : kExitOk;
}

int cmd_oracle(const std::string& in, int p, int q, int cap) {
  auto inst = load_instance(in);
  std::int64_t lambda = 0;
  check(il_exact_lambda(inst.get(), p, q, cap, &lambda), "oracle");
  auto lab = run_labeler(inst.get(), p, q);
  std::int64_t span = 0;
  check(il_labeling_span(lab.get(), &span), "span");
  json out;
  out["class"] = instance_class(inst.get());
  out["p"] = p;
  out["q"] = q;
  out["lambda"] = lambda;
  out["greedy_span"] = span;
  out["ratio"] = lambda > 0 ? json(static_cast<double>(span) / static_cast<double>(lambda)) : json(nullptr);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

const char* kBenchHeader =
    "class,seed,n,p,q,delta,mu,omega,span,bound,holds,report_only,valid,lambda_exact,runtime_us";

struct BenchRow {
  std::string cls;
  std::uint64_t seed = 0;
  int n = 0;
  int p = 0;
  int q = 0;
  json report;
  bool valid = true;
  std::optional<std::int64_t> lambda;
  long long runtime_us = 0;

  bool failed() const { return !valid || report.value("hard_failure", false); }

  std::string csv() const {
    const auto& stats = report["stats_used"];
    std::ostringstream s;
    s << cls << ',' << seed << ',' << n << ',' << p << ',' << q << ',' << stats["max_degree"] << ','
      << stats["mu"] << ',' << (stats["omega"].is_null() ? std::string() : stats["omega"].dump())
      << ',' << report["achieved_span"] << ',' << report["formula_value"] << ','
      << (report["holds"].get<bool>() ? "true" : "false") << ','
      << (report["report_only"].get<bool>() ? "true" : "false") << ',' << (valid ? "true" : "false")
      << ',' << (lambda ? std::to_string(*lambda) : std::string()) << ',' << runtime_us;
    return s.str();
  }

  json as_json() const {
    return {{"class", cls},   {"seed", seed},   {"n", n},
            {"p", p},         {"q", q},         {"report", report},
            {"valid", valid}, {"lambda_exact", lambda ? json(*lambda) : json(nullptr)},
            {"runtime_us", runtime_us}};
  }
};

std::vector<std::string> expand_classes(const std::vector<std::string>& classes) {
  const std::vector<std::string> all{"interval", "interval_k", "circular_arc", "containment",
                                     "interval_order"};
  if (classes.empty() || std::find(classes.begin(), classes.end(), "all") != classes.end()) return all;
  return classes;
}

int cmd_bench(const std::vector<std::string>& classes, const GenOptions& g, int count,
              std::optional<std::uint64_t> seed_flag, const std::vector<int>& ps,
              const std::vector<int>& qs, int cap, int omega_cap, int jobs,
              const std::string& format, const std::string& out) {
  const std::uint64_t seed = resolve_seed(seed_flag);
  struct Task {
    std::string cls;
    std::uint64_t seed;
    int p;
    int q;
  };
  std::vector<Task> tasks;
  for (const auto& cls : expand_classes(classes))
    for (int i = 0; i < count; ++i)
      for (int p : ps)
        for (int q : qs) tasks.push_back({cls, seed + static_cast<std::uint64_t>(i), p, q});

  std::vector<BenchRow> rows(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t t) {
    const Task& task = tasks[t];
    auto inst = generate(task.cls, g, task.seed);
    const auto start = std::chrono::steady_clock::now();
    auto lab = run_labeler(inst.get(), task.p, task.q);
    const auto stop = std::chrono::steady_clock::now();

    BenchRow& row = rows[t];
    row.cls = task.cls;
    row.seed = task.seed;
    row.n = g.n;
    row.p = task.p;
    row.q = task.q;
    row.runtime_us = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
    std::size_t violations = 0;
    check(il_validate(inst.get(), lab.get(), "L1", &violations, nullptr), "validate");
    row.valid = violations == 0;
    char* report = nullptr;
    check(il_bound_report(inst.get(), lab.get(), omega_cap, &report, nullptr), "bound report");
    row.report = json::parse(take(report));
    if (cap > 0 && g.n <= cap) {
      std::int64_t lambda = 0;
      check(il_exact_lambda(inst.get(), task.p, task.q, cap, &lambda), "oracle");
      row.lambda = lambda;
    }
  });

  bool failed = false;
  std::string text;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back(r.as_json());
      failed = failed || r.failed();
    }
    text = arr.dump(2) + "\n";
  } else {
    text = std::string(kBenchHeader) + "\n";
    for (const auto& r : rows) {
      text += r.csv() + "\n";
      failed = failed || r.failed();
    }
  }
  write_output(out, text);
  return failed ? kExitViolation : kExitOk;
}

std::vector<std::string> claims_for_class(const std::string& cls) {
  if (cls == "interval") return {"interval-lemma"};
  if (cls == "containment") return {"perm-nesting"};
  if (cls == "interval_order") return {"cointerval-min", "cointerval-equiv"};
  return {};
}

int cmd_claims(const GenOptions& g, const std::vector<std::string>& claims_flag, int count,
               std::optional<std::uint64_t> seed_flag, int jobs, const std::string& out) {
  const std::uint64_t seed = resolve_seed(seed_flag);
  const auto claims = claims_flag.empty() ? claims_for_class(g.cls) : claims_flag;
  if (claims.empty()) throw CliError("no structural claims are defined for class " + g.cls);

  std::vector<std::vector<json>> results(static_cast<std::size_t>(count));
  parallel_for(static_cast<std::size_t>(count), jobs, [&](std::size_t i) {
    auto inst = generate(g.cls, g, seed + i);
    for (const auto& claim : claims) {
      char* text = nullptr;
      check(il_check_claim(inst.get(), claim.c_str(), &text), "claim " + claim);
      results[i].push_back(json::parse(take(text)));
    }
  });

  json summary = json::array();
  bool failed = false;
  for (std::size_t c = 0; c < claims.size(); ++c) {
    json rec;
    rec["claim"] = claims[c];
    int checked = 0;
    int not_applicable = 0;
    json violations = json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const json& r = results[i][c];
      if (r["applicable"].get<bool>()) ++checked;
      else ++not_applicable;
      for (const auto& v : r["violations"])
        violations.push_back({{"seed", seed + i}, {"witness", v["witness"]}, {"detail", v["detail"]}});
    }
    failed = failed || !violations.empty();
    rec["checked"] = checked;
    rec["not_applicable"] = not_applicable;
    rec["violations"] = std::move(violations);
    summary.push_back(std::move(rec));
  }
  write_output(out, summary.dump(2) + "\n");
  return failed ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L(p,q)-labeling of graphs with interval-type representations"};
  app.require_subcommand(1);

  GenOptions gen_opts;
  int count = 1;
  std::optional<std::uint64_t> seed;
  int p = 2;
  int q = 1;
  std::vector<int> ps{2};
  std::vector<int> qs{1};
  std::string variant = "L1";
  int cap = 12;
  int omega_cap = 64;
  int jobs = 1;
  std::string in;
  std::string out;
  std::string report;
  std::string labeling;
  std::string format = "csv";
  std::vector<std::string> classes;
  std::vector<std::string> claim_tags;

  const std::vector<std::string> class_names{"interval", "interval_k", "circular_arc", "containment",
                                             "interval_order"};

  auto* gen = app.add_subcommand("gen", "Generate seeded instance files");
  gen->add_option("--class", gen_opts.cls, "Instance class")->required()->check(CLI::IsMember(class_names));
  add_gen_options(gen, gen_opts);
  gen->add_option("--count", count, "Number of instances")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed, "Base seed (instance i uses seed + i)");
  gen->add_option("--out", out, "Output directory");

  auto* label = app.add_subcommand("label", "Label an instance and report its bound");
  label->add_option("--in", in, "Instance file")->required();
  label->add_option("--p", p)->check(CLI::PositiveNumber);
  label->add_option("--q", q)->check(CLI::PositiveNumber);
  label->add_option("--omega-cap", omega_cap, "Exact clique number up to this n");
  label->add_option("--out", out, "Labeling file (default: stdout)");
  label->add_option("--report", report, "Bound report file (default: stderr)");

  auto* checkc = app.add_subcommand("check", "Validate a labeling and compare with the class bound");
  checkc->add_option("--in", in, "Instance file")->required();
  checkc->add_option("--labeling", labeling, "Labeling file (default: run the labeler)");
  checkc->add_option("--p", p)->check(CLI::PositiveNumber);
  checkc->add_option("--q", q)->check(CLI::PositiveNumber);
  checkc->add_option("--variant", variant)->check(CLI::IsMember({"L1", "L2", "L3"}));
  checkc->add_option("--omega-cap", omega_cap);
  checkc->add_option("--out", out, "Report file (default: stdout)");

  auto* oracle = app.add_subcommand("oracle", "Exact lambda by exhaustive search");
  oracle->add_option("--in", in, "Instance file")->required();
  oracle->add_option("--p", p)->check(CLI::PositiveNumber);
  oracle->add_option("--q", q)->check(CLI::PositiveNumber);
  oracle->add_option("--cap", cap, "Largest n searched exactly");

  auto* bench = app.add_subcommand("bench", "Sweep generated instances over a (p,q) grid");
  bench->add_option("--class", classes, "Classes to sweep (or 'all')")
      ->check(CLI::IsMember([&] {
        auto v = class_names;
        v.push_back("all");
        return v;
      }()));
  add_gen_options(bench, gen_opts);
  bench->add_option("--count", count)->check(CLI::NonNegativeNumber);
  bench->add_option("--seed", seed);
  bench->add_option("--p", ps, "p values")->expected(0, -1);
  bench->add_option("--q", qs, "q values")->expected(0, -1);
  bench->add_option("--cap", cap, "Run the exact oracle when n <= cap (0 disables)");
  bench->add_option("--omega-cap", omega_cap);
  bench->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  bench->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--out", out, "Output file (default: stdout)");

  auto* claims = app.add_subcommand("claims", "Sweep structural claims over generated instances");
  claims->add_option("--class", gen_opts.cls)->required()->check(CLI::IsMember(class_names));
  claims->add_option("--claim", claim_tags, "Claim tag (default: all for the class)");
  add_gen_options(claims, gen_opts);
  claims->add_option("--count", count)->check(CLI::NonNegativeNumber);
  claims->add_option("--seed", seed);
  claims->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  claims->add_option("--out", out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_opts, count, seed, out);
    if (label->parsed()) return cmd_label(in, p, q, omega_cap, out, report);
    if (checkc->parsed()) return cmd_check(in, labeling, p, q, variant, omega_cap, out);
    if (oracle->parsed()) return cmd_oracle(in, p, q, cap);
    if (bench->parsed())
      return cmd_bench(classes, gen_opts, count, seed, ps, qs, cap, omega_cap, jobs, format, out);
    if (claims->parsed()) return cmd_claims(gen_opts, claim_tags, count, seed, jobs, out);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
