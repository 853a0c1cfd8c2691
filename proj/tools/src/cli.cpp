#include "torushom/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "torushom/engine.hpp"
#include "torushom/errors.hpp"
#include "torushom/format.hpp"
#include "torushom/hecke.hpp"
#include "torushom/memo_cache.hpp"
#include "torushom/torus.hpp"

namespace torushom::cli {

namespace {

enum class Format { Json, Text, Latex };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  if (s == "latex") return Format::Latex;
  throw InvalidInput("unknown format \"" + s + "\" (expected json, text or latex)");
}

std::string unit_text(const std::optional<Unit>& u) {
  if (!u) return "none";
  return std::string(u->sign > 0 ? "+" : "-") + to_text(LaurentPoly::monomial(u->mono));
}

// Runs fn over items on up to `jobs` threads; results keep input order.
template <typename Item, typename Fn>
auto parallel_map(const std::vector<Item>& items, unsigned jobs, Fn fn) {
  using Result = decltype(fn(items.front()));
  std::vector<std::optional<Result>> results(items.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<Result> out;
  out.reserve(items.size());
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

struct Case {
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t k = 1;
};

struct CaseResult {
  Case c;
  bool pass = false;
  std::string detail;
};

int report_cases(const std::string& name, const std::vector<CaseResult>& results, std::ostream& out) {
  std::vector<std::string> failing;
  for (const auto& r : results) {
    out << name << " m=" << r.c.m << " n=" << r.c.n << " k=" << r.c.k << "  " << (r.pass ? "PASS" : "FAIL")
        << "  " << r.detail << "\n";
    if (!r.pass) failing.push_back("(" + std::to_string(r.c.m) + "," + std::to_string(r.c.n) + "," +
                                   std::to_string(r.c.k) + ")");
  }
  out << name << ": " << results.size() - failing.size() << "/" << results.size() << " passed";
  if (!failing.empty()) {
    out << "; failing:";
    for (const auto& f : failing) out << " " << f;
  }
  out << "\n";
  return failing.empty() ? kOk : kVerificationFailed;
}

struct Options {
  std::string cache;
  unsigned jobs = 1;

  std::vector<std::size_t> torus;
  std::size_t color = 1;
  std::string theory = "column";
  bool reduced = false;
  std::string format = "text";

  std::string v, w, sigma;
  bool explain = false;

  std::size_t max = 3;
  std::size_t color_max = 1;

  std::string braid;
  std::size_t strands = 0;
};

class Session {
 public:
  Session(const Options& opt, std::ostream& err) : err_(err) {
    if (!opt.cache.empty()) path_ = opt.cache;
    if (path_) {
      const CacheLoadResult r = cache_load(*path_, engine_.memo());
      for (const auto& w : r.warnings) err_ << "warning: " << w << "\n";
    }
  }
  ~Session() {
    if (!path_) return;
    try {
      cache_store(*path_, engine_.memo());
    } catch (const std::exception& e) {
      err_ << "warning: could not write cache: " << e.what() << "\n";
    }
  }
  const Engine& engine() const { return engine_; }

 private:
  std::ostream& err_;
  std::optional<std::string> path_;
  Engine engine_;
};

int cmd_compute(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.torus.size() != 2) throw InvalidInput("--torus expects two integers M N");
  const TorusLinkSpec spec{opt.torus[0], opt.torus[1], opt.color, parse_theory(opt.theory)};
  spec.validate();
  const Format fmt = parse_format(opt.format);
  Session session(opt, err);
  const InvariantReport report = make_report(spec, session.engine(), opt.reduced);
  switch (fmt) {
    case Format::Json: out << to_json(report).dump() << "\n"; break;
    case Format::Text: out << to_text(report); break;
    case Format::Latex: out << to_latex(report); break;
  }
  return kOk;
}

int cmd_state(const Options& opt, std::ostream& out, std::ostream& err) {
  const State state(Word(opt.v), Word(opt.w), Permutation::parse(opt.sigma), parse_theory(opt.theory));
  const Format fmt = parse_format(opt.format);
  if (opt.explain) {
    out << render_derivation(explain(state));
    return kOk;
  }
  Session session(opt, err);
  const RatFunc value = session.engine().evaluate(state);
  switch (fmt) {
    case Format::Json:
      out << nlohmann::json{{"theory", std::string(to_string(state.theory()))},
                            {"v", opt.v},
                            {"w", opt.w},
                            {"sigma", state.sigma().to_string()},
                            {"value", to_json(value)}}
                 .dump()
          << "\n";
      break;
    case Format::Text: out << to_text(value) << "\n"; break;
    case Format::Latex: out << to_latex(value) << "\n"; break;
  }
  return kOk;
}

std::vector<Case> grid(std::size_t max_mn, std::size_t max_k) {
  std::vector<Case> cases;
  for (std::size_t k = 1; k <= max_k; ++k)
    for (std::size_t m = 1; m <= max_mn; ++m)
      for (std::size_t n = 1; n <= max_mn; ++n) cases.push_back({m, n, k});
  return cases;
}

void check_range(const Options& opt) {
  if (opt.max == 0 || opt.color_max == 0) throw InvalidInput("--max and --color-max must be >= 1");
}

CaseResult unit_case(const Case& c, const UnitCheck& u) { return {c, u.pass, "unit=" + unit_text(u.unit)}; }

int cmd_verify_mirror(const Options& opt, std::ostream& out, std::ostream& err) {
  check_range(opt);
  Session s(opt, err);
  auto results = parallel_map(grid(opt.max, opt.color_max), opt.jobs, [&](const Case& c) {
    return unit_case(c, mirror_verify(c.m, c.n, c.k, s.engine()));
  });
  return report_cases("mirror", results, out);
}

int cmd_verify_invariance(const Options& opt, std::ostream& out, std::ostream& err) {
  check_range(opt);
  Session s(opt, err);
  auto results = parallel_map(grid(opt.max, opt.color_max), opt.jobs, [&](const Case& c) {
    return unit_case(c, invariance_verify(c.m, c.n, c.k, s.engine()));
  });
  return report_cases("invariance", results, out);
}

int cmd_verify_uncolored(const Options& opt, std::ostream& out, std::ostream& err) {
  check_range(opt);
  Session s(opt, err);
  auto results = parallel_map(grid(opt.max, 1), opt.jobs, [&](const Case& c) {
    return unit_case(c, uncolored_mirror_verify(c.m, c.n, s.engine()));
  });
  return report_cases("uncolored-mirror", results, out);
}

int cmd_verify_hrw(const Options& opt, std::ostream& out, std::ostream& err) {
  check_range(opt);
  Session s(opt, err);
  std::vector<Case> cases;
  for (std::size_t k = 1; k <= opt.color_max; ++k) cases.push_back({1, 1, k});
  auto results = parallel_map(cases, opt.jobs, [&](const Case& c) {
    return unit_case(c, hrw_ratio_check(c.k, s.engine()));
  });
  return report_cases("hrw", results, out);
}

int cmd_verify_homfly(const Options& opt, std::ostream& out, std::ostream& err) {
  check_range(opt);
  Session s(opt, err);
  const int twist = calibrate_homfly_twist(s.engine());
  out << "homfly: calibrated twist A -> " << (twist > 0 ? "+A" : "-A") << "\n";
  if (twist != kHomflyTwist) throw InternalContradiction("calibrated twist differs from the frozen constant");
  std::vector<Case> cases;
  for (std::size_t m = 1; m <= opt.max; ++m)
    for (std::size_t n = m; n <= opt.max; ++n)
      if (std::gcd(m, n) == 1) cases.push_back({m, n, 1});
  auto results = parallel_map(cases, opt.jobs, [&](const Case& c) {
    const HomflyCheck h = homfly_verify(c.m, c.n, s.engine());
    return CaseResult{c, h.pass, "unit=" + unit_text(h.unit) + "  P=" + to_text(h.oracle)};
  });
  return report_cases("homfly", results, out);
}

int cmd_table(const Options& opt, std::ostream& out, std::ostream& err) {
  check_range(opt);
  const Theory theory = parse_theory(opt.theory);
  const Format fmt = parse_format(opt.format);
  Session s(opt, err);
  auto reports = parallel_map(grid(opt.max, opt.color_max), opt.jobs, [&](const Case& c) {
    return make_report({c.m, c.n, c.k, theory}, s.engine(), opt.reduced);
  });
  for (const auto& r : reports) {
    switch (fmt) {
      case Format::Json: out << to_json(r).dump() << "\n"; break;
      case Format::Text: out << to_text(r); break;
      case Format::Latex: out << to_latex(r); break;
    }
  }
  return kOk;
}

int cmd_homfly(const Options& opt, std::ostream& out) {
  const auto word = hecke::parse_braid_word(opt.braid);
  std::size_t strands = opt.strands;
  if (strands == 0) {
    strands = 1;
    for (int g : word) strands = std::max<std::size_t>(strands, static_cast<std::size_t>(std::abs(g)) + 1);
  }
  out << to_text(hecke::homfly_braid_closure(word, strands), kHeckeVars) << "\n";
  return kOk;
}

int cmd_cache_info(const Options& opt, std::ostream& out) {
  out << "fingerprint: " << convention_fingerprint() << "\n";
  out << "convention: " << convention_descriptor() << "\n";
  if (opt.cache.empty()) {
    out << "cache: none (set --cache or TORUSHOM_CACHE)\n";
    return kOk;
  }
  MemoTable table;
  const CacheLoadResult r = cache_load(opt.cache, table);
  out << "cache: " << opt.cache << "\n";
  out << "entries: " << r.loaded << "\n";
  out << "skipped: " << r.skipped << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return kOk;
}

}  // namespace

Environment environment_from_process() {
  Environment env;
  if (const char* p = std::getenv("TORUSHOM_CACHE"); p != nullptr && *p != '\0') env.cache_path = p;
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  Options opt;
  if (env.cache_path) opt.cache = *env.cache_path;

  CLI::App app{"Graded dimensions of y-ified colored torus-link homology"};
  app.name("torushom");
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--cache", opt.cache, "Memo cache file (default: $TORUSHOM_CACHE)");
  app.add_option("--jobs,-j", opt.jobs, "Worker threads for table and verify")->check(CLI::Range(1u, 1024u));

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text", "latex"}));
  };
  auto add_theory = [&](CLI::App* sub) {
    sub->add_option("--theory", opt.theory, "Coloring theory")->check(CLI::IsMember({"column", "row"}));
  };

  CLI::App* compute = app.add_subcommand("compute", "Invariant of one colored torus link");
  compute->add_option("--torus", opt.torus, "M N")->expected(2)->required();
  compute->add_option("--color", opt.color, "Color k")->check(CLI::PositiveNumber);
  add_theory(compute);
  compute->add_flag("--reduced", opt.reduced, "Also print the reduced invariant");
  add_format(compute);

  CLI::App* state = app.add_subcommand("state", "Value of one recursion state p_sigma(v, w)");
  state->add_option("--v", opt.v, "Bit string")->required();
  state->add_option("--w", opt.w, "Bit string")->required();
  state->add_option("--sigma", opt.sigma, "One-line permutation, e.g. 2,3,1");
  add_theory(state);
  add_format(state);
  state->add_flag("--explain", opt.explain, "Print the derivation tree instead");

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto add_range = [&](CLI::App* sub, bool colored) {
    sub->add_option("--max", opt.max, "Largest m and n");
    if (colored) sub->add_option("--color-max", opt.color_max, "Largest color k");
  };
  CLI::App* v_mirror = verify->add_subcommand("mirror", "Row/column mirror symmetry");
  add_range(v_mirror, true);
  CLI::App* v_invariance = verify->add_subcommand("invariance", "T(m,n) against T(n,m)");
  add_range(v_invariance, true);
  CLI::App* v_uncolored = verify->add_subcommand("uncolored", "Q/T symmetry of the uncolored invariant");
  add_range(v_uncolored, false);
  CLI::App* v_hrw = verify->add_subcommand("hrw", "Colored unknot against the [k]! ratio formula");
  v_hrw->add_option("--color-max", opt.color_max, "Largest color k");
  CLI::App* v_homfly = verify->add_subcommand("homfly", "t = -1 specialization against the Hecke oracle");
  add_range(v_homfly, false);

  CLI::App* table = app.add_subcommand("table", "One report per (m, n, k)");
  add_range(table, true);
  add_theory(table);
  table->add_flag("--reduced", opt.reduced, "Include reduced invariants");
  add_format(table);

  CLI::App* homfly = app.add_subcommand("homfly", "HOMFLYPT polynomial of a braid closure");
  homfly->add_option("--braid", opt.braid, "Signed generators, e.g. 1,1,-2")->required();
  homfly->add_option("--strands", opt.strands, "Strand count (default: smallest that fits)");

  CLI::App* cache_info = app.add_subcommand("cache-info", "Describe the memo cache and convention fingerprint");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*compute) return cmd_compute(opt, out, err);
    if (*state) return cmd_state(opt, out, err);
    if (*v_mirror) return cmd_verify_mirror(opt, out, err);
    if (*v_invariance) return cmd_verify_invariance(opt, out, err);
    if (*v_uncolored) return cmd_verify_uncolored(opt, out, err);
    if (*v_hrw) return cmd_verify_hrw(opt, out, err);
    if (*v_homfly) return cmd_verify_homfly(opt, out, err);
    if (*table) return cmd_table(opt, out, err);
    if (*homfly) return cmd_homfly(opt, out);
    if (*cache_info) return cmd_cache_info(opt, out);
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InternalContradiction& e) {
    err << "internal contradiction: " << e.what() << "\n";
    return kInternalContradiction;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInternalContradiction;
  }
  return kInvalidInput;
}

}  // namespace torushom::cli
