#include <octjordan/json_io.hpp>
#include <octjordan/linalg.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace octjordan;

namespace {

constexpr int kPass = 0, kCheckFailed = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::uint64_t prime = kDefaultPrime;
  std::optional<std::uint64_t> seed;
  int trials = 100, samples = 200, retries = 3, jobs = 1;
  double tol = 1e-8;
  std::string checks, surface, matrix, input, out, transcript, format = "json", invariant;
};

std::uint64_t resolve_seed(const Config& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("OCTJORDAN_SEED")) {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("OCTJORDAN_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

void require_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw UsageError("--prime must be an odd prime, got " + std::to_string(p));
}

// fail before any work if the report cannot land
void require_writable(const std::string& path) {
  if (path.empty()) return;
  namespace fs = std::filesystem;
  const fs::path parent = fs::absolute(path).parent_path();
  std::error_code ec;
  if (!fs::is_directory(parent, ec)) throw UsageError("output directory does not exist: " + parent.string());
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write " + path);
}

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  void report(const char* what) const {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << what << ": " << s << " s\n";
  }
};

std::vector<std::string> split_checks(const std::string& s) {
  std::vector<std::string> ids;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }), tok.end());
    if (tok.empty()) continue;
    std::transform(tok.begin(), tok.end(), tok.begin(), [](unsigned char ch) { return std::toupper(ch); });
    ids.push_back(tok);
  }
  return ids;
}

int run_verify(const Config& c) {
  require_prime(c.prime);
  if (c.trials < 1) throw UsageError("--trials must be positive");
  require_writable(c.out);
  Stopwatch sw;
  SuiteReport r;
  try {
    r = run_suite(c.prime, resolve_seed(c), c.trials, split_checks(c.checks), c.jobs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  sw.report("verify");
  emit(canonical(to_json(r)), c.out);
  return r.passed() ? kPass : kCheckFailed;
}

int run_autdim(const Config& c) {
  require_prime(c.prime);
  if (c.retries < 1) throw UsageError("--retries must be positive");
  require_writable(c.out);
  Stopwatch sw;
  const AutDimReport r = aut_dimension_bound(c.prime, resolve_seed(c), c.retries, c.jobs);
  sw.report("autdim");
  emit(canonical(to_json(r)), c.out);
  return r.max_rank == 133 ? kPass : kCheckFailed;
}

int expected_corank(Surface s, BlockMatrix m) {
  if (s == Surface::sodm && m == BlockMatrix::M) return 4;
  if (s == Surface::cubic && m == BlockMatrix::N) return 4;
  if (s == Surface::sextic && m == BlockMatrix::N) return 2;
  return -1;  // no generic value claimed
}

int run_strata(const Config& c) {
  Surface s;
  BlockMatrix m;
  try {
    s = parse_surface(c.surface);
    m = parse_matrix(c.matrix);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (c.samples < 1) throw UsageError("--samples must be positive");
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
  require_writable(c.out);
  Stopwatch sw;
  const CorankCensus census = corank_census(s, m, c.samples, c.tol, resolve_seed(c), c.jobs);
  sw.report("strata");
  emit(c.format == "csv" ? census_csv(census) : canonical(to_json(census)), c.out);
  const int want = expected_corank(s, m);
  if (want < 0) return kPass;
  const auto it = census.histogram.find(want);
  const int hits = it == census.histogram.end() ? 0 : it->second;
  return census.mode == want && 20 * hits >= 19 * census.samples ? kPass : kCheckFailed;
}

HermitianTriple<cplx> load_complex_triple(const std::string& path) {
  try {
    return triple_from_json<cplx>(read_json_file(path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed triple: ") + e.what());
  }
}

int run_reduce(const Config& c) {
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
  require_writable(c.out);
  require_writable(c.transcript);
  const HermitianTriple<cplx> A = load_complex_triple(c.input);
  if (A.a.size() != 8) throw UsageError("reduce needs octonionic entries (8 coordinates each)");
  Stopwatch sw;
  json summary = {{"command", "reduce"}, {"tol", c.tol}};
  int code = kPass;
  try {
    const TransformWord w = reduce_to_identity(A, c.tol);
    sw.report("reduce");
    const bool ok = w.replay_residual <= c.tol && w.max_triality_defect <= 1e-10;
    summary["moves"] = w.moves.size();
    summary["residual"] = w.residual;
    summary["replay_residual"] = w.replay_residual;
    summary["max_triality_defect"] = w.max_triality_defect;
    summary["passed"] = ok;
    if (!c.transcript.empty()) emit(canonical(to_json(w)), c.transcript);
    code = ok ? kPass : kCheckFailed;
  } catch (const NonGeneric& e) {
    summary["passed"] = false;
    summary["non_generic"] = {{"step", e.step}, {"quantity", e.quantity}, {"value", e.value}};
    code = kCheckFailed;
  }
  emit(canonical(summary), c.out);
  return code;
}

template <class S>
json evaluate(const std::string& inv, const HermitianTriple<S>& A) {
  if (inv == "det_cartan") return to_json(det_cartan(A));
  if (inv == "s_odm") return to_json(s_odm(A));
  if (inv == "twisted_cubic") return to_json(twisted_cubic(A));
  if (inv == "twisted_sextic") return to_json(twisted_sextic(A));
  if (inv == "det_M") return to_json(det(build_M(A)));
  if (inv == "det_N") return to_json(det(build_N(A)));
  if (inv == "com") return to_json(com(A));
  throw UsageError("unknown invariant '" + inv + "'");
}

int run_eval(const Config& c, bool prime_given) {
  require_writable(c.out);
  json in;
  try {
    in = read_json_file(c.input);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::optional<std::uint64_t> p;
  if (prime_given) p = c.prime;
  else if (in.is_object() && in.contains("prime")) {
    try {
      p = std::stoull(in.at("prime").is_string() ? in.at("prime").get<std::string>() : in.at("prime").dump());
    } catch (const std::exception&) {
      throw UsageError("bad 'prime' field");
    }
  }
  const json& point = in.is_object() && in.contains("point") ? in.at("point") : in;
  json out = {{"command", "eval"}, {"invariant", c.invariant}};
  try {
    if (p) {
      require_prime(*p);
      ModulusGuard guard(*p);
      out["prime"] = std::to_string(*p);
      out["value"] = evaluate(c.invariant, triple_from_json<Fp>(point));
    } else {
      out["value"] = evaluate(c.invariant, triple_from_json<cplx>(point));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed triple: ") + e.what());
  }
  emit(canonical(out), c.out);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Octonionic Jordan algebra identities, symmetries and degeneracy loci"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s) {
    s->add_option("--seed", c.seed, "master seed (falls back to $OCTJORDAN_SEED, then 0)");
    s->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    s->add_option("--out", c.out, "write the report here instead of stdout");
  };

  auto* verify = app.add_subcommand("verify", "randomized identity suite over F_p");
  common(verify);
  verify->add_option("--prime", c.prime, "odd prime modulus")->capture_default_str();
  verify->add_option("--trials", c.trials, "trials per identity")->capture_default_str();
  verify->add_option("--checks", c.checks, "comma-separated check ids (default: all)");

  auto* autdim = app.add_subcommand("autdim", "Jacobian-image rank bounding the symmetry algebra of the sextic");
  common(autdim);
  std::uint64_t autdim_prime = 313;
  autdim->add_option("--prime", autdim_prime, "odd prime modulus")->capture_default_str();
  autdim->add_option("--retries", c.retries, "random restriction attempts")->capture_default_str();

  auto* strata = app.add_subcommand("strata", "corank census on a degeneracy hypersurface");
  common(strata);
  strata->add_option("--surface", c.surface, "sodm | cubic | sextic")->required();
  strata->add_option("--matrix", c.matrix, "M | N")->required();
  strata->add_option("--samples", c.samples)->capture_default_str();
  strata->add_option("--tol", c.tol, "relative singular-value cut")->capture_default_str();
  strata->add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "reduce a generic complex triple to the identity");
  common(reduce);
  double reduce_tol = 1e-6;
  reduce->add_option("--input", c.input, "triple JSON")->required();
  reduce->add_option("--tol", reduce_tol, "replay residual bound")->capture_default_str();
  reduce->add_option("--transcript", c.transcript, "write the full transform word here");

  auto* eval = app.add_subcommand("eval", "evaluate an invariant at a JSON point");
  common(eval);
  std::uint64_t eval_prime = 0;
  eval->add_option("--invariant", c.invariant, "det_cartan | s_odm | twisted_cubic | twisted_sextic | det_M | det_N | com")
      ->required();
  eval->add_option("--input", c.input, "triple JSON")->required();
  eval->add_option("--prime", eval_prime, "evaluate exactly over F_p");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) return run_verify(c);
    if (*autdim) {
      c.prime = autdim_prime;
      return run_autdim(c);
    }
    if (*strata) return run_strata(c);
    if (*reduce) {
      c.tol = reduce_tol;
      return run_reduce(c);
    }
    if (*eval) {
      c.prime = eval_prime;
      return run_eval(c, eval->count("--prime") > 0);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
