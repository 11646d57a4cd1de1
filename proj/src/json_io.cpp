#include <octjordan/json_io.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace octjordan {

namespace {

template <class S>
S scalar_from_json(const json& j) {
  if constexpr (std::is_same_v<S, Fp>)
    return fp_from_json(j);
  else
    return cplx_from_json(j);
}

template <class S>
Vec<S> vec_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string("expected an array for ") + what);
  Vec<S> v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = scalar_from_json<S>(j[i]);
  return v;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

json histogram_json(const std::map<int, int>& h) {
  json o = json::object();
  for (auto [k, n] : h) o[std::to_string(k)] = n;
  return o;
}

}  // namespace

json to_json(Fp x) { return std::to_string(x.value()); }

json to_json(cplx x) { return json::array({x.real(), x.imag()}); }

Fp fp_from_json(const json& j) {
  if (j.is_number_integer()) return Fp(j.get<long long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw std::invalid_argument("bad field element '" + s + "'");
    return Fp(v);
  }
  throw std::invalid_argument("field elements must be integers or decimal strings");
}

cplx cplx_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  throw std::invalid_argument("complex scalars must be numbers or [re, im]");
}

template <class S>
HermitianTriple<S> triple_from_json(const json& j) {
  HermitianTriple<S> A;
  const json& lam = field(j, "lambda");
  if (!lam.is_array() || lam.size() != 3) throw std::invalid_argument("'lambda' must hold three scalars");
  for (int i = 0; i < 3; ++i) A.lambda[i] = scalar_from_json<S>(lam[i]);
  A.a = vec_from_json<S>(field(j, "a"), "a");
  A.b = vec_from_json<S>(field(j, "b"), "b");
  A.c = vec_from_json<S>(field(j, "c"), "c");
  check_same_level(A);
  if (j.contains("level") && j.at("level") != A.level())
    throw std::invalid_argument("'level' does not match the entry length");
  return A;
}

template HermitianTriple<Fp> triple_from_json<Fp>(const json&);
template HermitianTriple<cplx> triple_from_json<cplx>(const json&);

Mat<cplx> cmat_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw std::invalid_argument("expected a matrix");
  Mat<cplx> m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(j[0].size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j[0].size()) throw std::invalid_argument("ragged matrix");
    for (std::size_t k = 0; k < j[i].size(); ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = cplx_from_json(j[i][k]);
  }
  return m;
}

json to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json subs = json::array();
    for (const auto& s : c.subs) {
      json o = {{"name", s.name},
                {"degree", s.degree},
                {"trials_run", s.trials_run},
                {"passed", s.passed},
                {"failure_bound", s.failure_bound}};
      if (s.warning) o["warning"] = *s.warning;
      if (s.failure) o["failure"] = {{"trial", s.failure->trial}, {"point", s.failure->point}, {"defect", s.failure->defect}};
      if (!s.histogram.empty()) o["histogram"] = histogram_json(s.histogram);
      subs.push_back(std::move(o));
    }
    checks.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed()}, {"subchecks", subs}});
  }
  return {{"command", "verify"},
          {"prime", std::to_string(r.prime)},
          {"seed", r.seed},
          {"trials", r.trials},
          {"max_degree", r.max_degree},
          {"passed", r.passed()},
          {"checks", checks}};
}

json to_json(const AutDimReport& r) {
  json o = {{"command", "autdim"},
            {"prime", std::to_string(r.prime)},
            {"seed", r.seed},
            {"retries", r.retries},
            {"ranks", r.ranks},
            {"rows", r.rows},
            {"cols", r.cols},
            {"sodm_terms", r.term_count},
            {"symmetry_dimension", 29}};
  if (r.max_rank) {
    o["rank"] = *r.max_rank;
    o["bound"] = *r.bound;
  }
  return o;
}

json to_json(const CorankCensus& c) {
  json o = {{"command", "strata"},
            {"surface", to_string(c.surface)},
            {"matrix", to_string(c.matrix)},
            {"samples", c.samples},
            {"tol", c.tol},
            {"seed", c.seed},
            {"backend", c.backend},
            {"histogram", histogram_json(c.histogram)},
            {"mode", c.mode},
            {"well_separated", c.well_separated}};
  if (c.witness) {
    o["witness"] = to_json(*c.witness);
    o["witness_rank"] = c.witness_rank;
  }
  return o;
}

json to_json(const TransformWord& w) {
  json moves = json::array();
  for (const auto& m : w.moves) {
    if (m.kind == Move::Kind::triality)
      moves.push_back({{"kind", "triality"}, {"T1", to_json(m.t.T1)}, {"T2", to_json(m.t.T2)}});
    else
      moves.push_back({{"kind", "congruence"}, {"H", to_json(m.H)}});
  }
  json states = json::array();
  for (const auto& [label, s] : w.states)
    states.push_back({{"label", label},
                      {"triple", to_json(s)},
                      {"twisted_cubic", to_json(twisted_cubic(s))},
                      {"twisted_sextic", to_json(twisted_sextic(s))}});
  return {{"command", "reduce"},
          {"input", to_json(w.input)},
          {"final", to_json(w.final_state)},
          {"moves", moves},
          {"scalar", to_json(w.scalar)},
          {"states", states},
          {"residual", w.residual},
          {"replay_residual", w.replay_residual},
          {"max_triality_defect", w.max_triality_defect},
          {"max_triality_invariant_drift", w.max_triality_invariant_drift}};
}

TransformWord word_from_json(const json& j) {
  TransformWord w;
  w.input = triple_from_json<cplx>(field(j, "input"));
  for (const auto& m : field(j, "moves")) {
    Move mv;
    const std::string kind = field(m, "kind").get<std::string>();
    if (kind == "triality") {
      mv.kind = Move::Kind::triality;
      mv.t = {cmat_from_json(field(m, "T1")), cmat_from_json(field(m, "T2"))};
    } else if (kind == "congruence") {
      mv.H = cmat_from_json(field(m, "H"));
    } else {
      throw std::invalid_argument("unknown move kind '" + kind + "'");
    }
    w.moves.push_back(std::move(mv));
  }
  w.scalar = cplx_from_json(field(j, "scalar"));
  w.final_state = triple_from_json<cplx>(field(j, "final"));
  return w;
}

std::string census_csv(const CorankCensus& c) {
  std::ostringstream os;
  os << "surface,matrix,samples,tol,seed,backend,corank,count\n";
  for (auto [k, n] : c.histogram)
    os << to_string(c.surface) << ',' << to_string(c.matrix) << ',' << c.samples << ',' << c.tol << ',' << c.seed << ','
       << c.backend << ',' << k << ',' << n << '\n';
  return os.str();
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace octjordan
