#include <cstdlib>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "hpd/profile_io.hpp"
#include "hpd/prover.hpp"
#include "hpd/render.hpp"
#include "hpd/synthesis.hpp"

using namespace hpd;

namespace {

constexpr int kOk = 0, kVerdictFalse = 1, kOperational = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw UsageError("");
      return {v, v};
    }
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw UsageError("");
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw UsageError("");
    if (lo > hi) throw UsageError("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + s + "' (expected a..b with a <= b, or a single integer)");
  }
}

unsigned default_jobs() {
  if (const char* env = std::getenv("HPD_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("HPD_JOBS must be a positive integer (got '") + env + "')");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Either two profile files or a generic i,l,N spec.
struct SpecArgs {
  std::string ix, is;
  std::vector<int> generic;

  void add(CLI::App* c) {
    c->add_option("--ix", ix, "profile file for X");
    c->add_option("--is", is, "profile file for S");
    c->add_option("--generic", generic, "generic spec with all blocks nonzero: i l N")->expected(3);
  }
  ChessboardSpec get() const {
    if (!generic.empty()) {
      if (!ix.empty() || !is.empty()) throw UsageError("give either --ix/--is or --generic, not both");
      return generic_spec(generic[0], generic[1], generic[2]);
    }
    if (ix.empty() || is.empty()) throw UsageError("need --ix and --is (or --generic i l N)");
    ChessboardSpec s{load_profile(ix), load_profile(is)};
    validate_spec(s);
    return s;
  }
};

void emit(const std::string& bytes, const std::string& out) {
  if (out.empty()) std::cout << bytes;
  else write_file(out, bytes);
}

std::string opt_str(const std::optional<long long>& v) { return v ? std::to_string(*v) : "?"; }

void print_report(const DecompositionReport& r) {
  std::cout << "D(" << to_string(r.target) << ") = <";
  for (size_t n = 0; n < r.components.size(); ++n) std::cout << (n ? ", " : "") << r.components[n].description;
  std::cout << ">\n";
  for (const auto& c : r.components)
    std::cout << "  " << c.description << "  chi = " << (c.euler ? std::to_string(*c.euler) : "chi(E)") << "\n";
  std::cout << "  omitted zero components: " << r.omitted << "\n";
  std::cout << "  total: " << r.total_expr() << "\n";
}

int cmd_validate(const std::string& path) {
  const auto p = load_profile(path);
  const auto vs = validate_profile(p);
  bool errors = false;
  for (const auto& v : vs) {
    const bool err = v.severity == Violation::Severity::Error;
    errors = errors || err;
    std::cout << (err ? "error: " : "warning: ") << v.reason << "\n";
  }
  if (!errors) std::cout << "valid: " << p.name << " (i=" << p.length() << ", N=" << p.N << ")\n";
  return errors ? kVerdictFalse : kOk;
}

int cmd_euler(const std::string& path) {
  const auto p = load_profile(path);
  require_valid(p);
  const auto d = dualize(p);
  const long long a = euler_ambient(p), x = euler_total(p), y = euler_total(d);
  std::cout << "chi^H(A_0) = " << a << "\n"
            << "chi(X) = " << x << "\n"
            << "chi(Y) = " << y << "\n"
            << "chi(X) + chi(Y) = " << x + y << ", N * chi^H(A_0) = " << p.N * a << "\n";
  return x + y == p.N * a ? kOk : kVerdictFalse;
}

int cmd_intersect(const std::string& fx, const std::string& fs, const std::optional<long long>& chiXT) {
  const auto X = load_profile(fx), S = load_profile(fs);
  const auto [xt, ys] = intersect_decompositions(X, S);
  print_report(xt);
  print_report(ys);
  if (chiXT) {
    const auto p = plucker_predict(X, S, *chiXT);
    std::cout << "chi(X_T) = " << *chiXT << " gives chi(Y_S) = " << to_string(p.value) << "\n";
    std::cout << "chi(E) = " << to_string(Rational(*chiXT) - Rational(xt.ambient_euler())) << "\n";
    if (!p.integral) {
      std::cout << "warning: " << p.warning << "\n";
      return kVerdictFalse;
    }
  }
  return kOk;
}

int cmd_plucker(const std::string& example, const std::string& db_path, const std::vector<long long>& vals,
                std::optional<long long> N) {
  long long chiX, chiY, chiS, chiT, chiXT, chiYS, n;
  if (!example.empty()) {
    if (!vals.empty()) throw UsageError("give either --example or --values, not both");
    const ExampleDB db = db_path.empty() ? builtin_db() : parse_examples(read_file(db_path));
    const auto r = find_example(db.records, example);
    if (!r) throw UsageError("unknown example '" + example + "'");
    std::cout << r->name << ": " << r->title << "\n";
    std::cout << "chi(X)=" << r->chiX << " chi(Y)=" << r->chiY << " chi(S)=" << r->chiS << " chi(T)=" << r->chiT
              << " chi(X_T)=" << opt_str(r->chiXT) << " chi(Y_S)=" << opt_str(r->chiYS) << " N=" << r->N << "\n";
    if (!r->complete()) {
      // chi(X_T) and chi(Y_S) unknown: the formula fixes their difference
      const Rational diff = Rational(r->chiX * r->chiT, r->N) - Rational(r->chiY * r->chiS, r->N);
      std::cout << "chi(Y_S) - chi(X_T) = " << to_string(-diff) << "\n";
      return kOk;
    }
    chiX = r->chiX, chiY = r->chiY, chiS = r->chiS, chiT = r->chiT, chiXT = *r->chiXT, chiYS = *r->chiYS;
    n = r->N;
  } else {
    if (vals.size() != 6 || !N) throw UsageError("need --example NAME or --values chiX chiY chiS chiT chiXT chiYS --N N");
    chiX = vals[0], chiY = vals[1], chiS = vals[2], chiT = vals[3], chiXT = vals[4], chiYS = vals[5];
    n = *N;
  }
  if (n <= 0) throw UsageError("N must be positive");
  const auto r = plucker_check(chiX, chiY, chiS, chiT, chiXT, chiYS, n);
  std::cout << "lhs = chi(X_T) - chi(X)chi(T)/N = " << to_string(r.lhs) << "\n"
            << "rhs = chi(Y_S) - chi(Y)chi(S)/N = " << to_string(r.rhs) << "\n"
            << (r.holds ? "holds" : "fails") << "\n";
  return r.holds ? kOk : kVerdictFalse;
}

int cmd_prove(const SpecArgs& sa, const std::string& phase, const std::string& out, bool quiet) {
  const auto spec = sa.get();
  ProofTrace t;
  if (phase == "all") t = check_main_theorem(spec);
  else if (phase == "ff_pi_T") t = check_ff_pi_T(spec);
  else if (phase == "ff_pi_S") t = check_ff_pi_S(spec);
  else if (phase == "generation") t = check_generation(spec);
  else throw UsageError("unknown phase '" + phase + "' (all, ff_pi_T, ff_pi_S, generation)");
  if (!quiet || !out.empty()) emit(serialize_trace(t), out);
  std::cerr << t.obligations.size() << " obligations, " << t.failed_count() << " failed\n";
  return t.success() ? kOk : kVerdictFalse;
}

int cmd_sweep(const std::string& ir, const std::string& lr, int n_max, int n_min, std::optional<unsigned> jobs) {
  SweepRange r;
  std::tie(r.i_lo, r.i_hi) = parse_range(ir);
  std::tie(r.l_lo, r.l_hi) = parse_range(lr);
  r.n_max = n_max;
  r.n_min = n_min;
  if (r.i_lo < 1 || r.l_lo < 1) throw UsageError("i and l start at 1");
  const auto pts = run_sweep(r, jobs ? *jobs : default_jobs());
  if (pts.empty()) throw UsageError("empty sweep range");
  size_t bad = 0;
  for (const auto& p : pts) {
    std::cout << "i=" << p.i << " l=" << p.l << " N=" << p.N << " obligations=" << p.obligations
              << " failed=" << p.failed << (p.success ? " ok" : " FAILED") << "\n";
    if (!p.success) ++bad;
  }
  if (bad == 0) std::cout << "all specs verified (" << pts.size() << ")\n";
  else std::cout << bad << " of " << pts.size() << " specs failed\n";
  return bad == 0 ? kOk : kVerdictFalse;
}

Region named_region(const std::string& name, const ChessboardSpec& spec) {
  if (name == "E") return staircase_E(spec);
  const auto colon = name.find(':');
  const std::string kind = name.substr(0, colon);
  int k = 0;
  try {
    if (colon == std::string::npos) throw std::invalid_argument("");
    k = std::stoi(name.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("bad region '" + name + "' (pi_T:k, pi_S:k or E)");
  }
  if (kind == "pi_T") return staircase_pi_T(k, spec);
  if (kind == "pi_S") return staircase_pi_S(k, spec);
  throw UsageError("bad region '" + name + "' (pi_T:k, pi_S:k or E)");
}

int cmd_render(const std::string& target, const std::string& profile, const SpecArgs& sa,
               const std::vector<std::string>& highlights, const std::string& format, int cell, bool cl,
               const std::string& out) {
  RenderOptions o;
  if (format == "svg") o.format = Format::SVG;
  else if (format != "text") throw UsageError("format must be text or svg");
  o.cell = cell;
  o.cl_columns = cl;
  if (target == "profile") {
    if (profile.empty()) throw UsageError("render profile needs --profile");
    emit(render_profile_pair(load_profile(profile), o), out);
    return kOk;
  }
  const auto spec = sa.get();
  if (target == "chessboard") {
    for (const auto& h : highlights) {
      // REGION[=STYLE]
      const auto eq = h.find('=');
      const Style st = eq == std::string::npos ? Style::Staircase : parse_style(h.substr(eq + 1));
      o.highlight.push_back({named_region(h.substr(0, eq), spec), st});
    }
    emit(render_chessboard(spec, o), out);
    return kOk;
  }
  if (target == "trace") {
    const auto t = check_main_theorem(spec);
    emit(render_trace(t, o), out);
    return t.success() ? kOk : kVerdictFalse;
  }
  throw UsageError("render target must be profile, chessboard or trace");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hpdcalc: Lefschetz profiles, chessboard proofs and Euler bookkeeping"};
  app.require_subcommand(1);

  std::string path, out, fx, fs, example, db_path, phase = "all", ir, lr, target, profile, format = "text";
  std::optional<long long> chiXT, N;
  std::vector<long long> vals;
  std::vector<std::string> highlights;
  int n_max = 25, n_min = 0, cell = 24;
  std::optional<unsigned> jobs;
  bool quiet = false, cl = false;
  SpecArgs prove_spec, render_spec;

  auto* validate = app.add_subcommand("validate", "check a profile file");
  validate->add_option("profile", path)->required();

  auto* dual = app.add_subcommand("dualize", "write the dual profile");
  dual->add_option("profile", path)->required();
  dual->add_option("-o,--out", out, "output file (default stdout)");

  auto* euler = app.add_subcommand("euler", "Euler characteristics of a profile and its dual");
  euler->add_option("profile", path)->required();

  auto* inter = app.add_subcommand("intersect", "decompositions of D(X_T) and D(Y_S)");
  inter->add_option("--ix", fx)->required();
  inter->add_option("--is", fs)->required();
  inter->add_option("--chi-xt", chiXT, "known chi(X_T)");

  auto* pl = app.add_subcommand("plucker", "check the Pluecker formula");
  pl->add_option("--example", example, "example name, e.g. Gr26");
  pl->add_option("--examples-file", db_path, "example file (default: built-in)");
  pl->add_option("--values", vals, "chiX chiY chiS chiT chiXT chiYS")->expected(6);
  pl->add_option("--N", N);

  auto* prove = app.add_subcommand("prove", "check the main theorem for a spec");
  prove_spec.add(prove);
  prove->add_option("--phase", phase, "all, ff_pi_T, ff_pi_S or generation");
  prove->add_option("-o,--out", out, "trace file (default stdout)");
  prove->add_flag("-q,--quiet", quiet, "only the summary");

  auto* sweep = app.add_subcommand("sweep", "check the theorem over a parameter range");
  sweep->add_option("--i", ir, "range a..b")->required();
  sweep->add_option("--l", lr, "range a..b")->required();
  sweep->add_option("--n-max", n_max);
  sweep->add_option("--n-min", n_min, "default max(i,l)+1");
  sweep->add_option("--jobs", jobs, "worker threads (default $HPD_JOBS, else hardware)")
      ->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "draw a profile, a chessboard or a proof trace");
  render->add_option("target", target, "profile, chessboard or trace")->required();
  render->add_option("--profile", profile);
  render_spec.add(render);
  render->add_option("--highlight", highlights, "REGION[=STYLE], REGION in pi_T:k, pi_S:k, E");
  render->add_option("--format", format, "text or svg");
  render->add_option("--cell", cell, "SVG cell size")->check(CLI::PositiveNumber);
  render->add_flag("--cl", cl, "draw the C^L columns");
  render->add_option("-o,--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kOperational;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*dual) {
      emit(serialize_profile(dualize(load_profile(path))), out);
      return kOk;
    }
    if (*euler) return cmd_euler(path);
    if (*inter) return cmd_intersect(fx, fs, chiXT);
    if (*pl) return cmd_plucker(example, db_path, vals, N);
    if (*prove) return cmd_prove(prove_spec, phase, out, quiet);
    if (*sweep) return cmd_sweep(ir, lr, n_max, n_min, jobs);
    if (*render) return cmd_render(target, profile, render_spec, highlights, format, cell, cl, out);
  } catch (const ParseError& e) {
    // what() already leads with line:column when the position is known
    std::cerr << "error: " << e.what() << "\n";
    return kOperational;
  } catch (const ProfileError& e) {
    // invalid profile content is a validation verdict, not an IO problem
    std::cerr << "invalid: " << e.what() << "\n";
    return kVerdictFalse;
  } catch (const SpecError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kVerdictFalse;
  } catch (const SpecMismatch& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kVerdictFalse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOperational;
  }
  return kOperational;
}
