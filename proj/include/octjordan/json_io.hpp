#pragma once

#include <octjordan/autdim.hpp>
#include <octjordan/reduce.hpp>
#include <octjordan/strata.hpp>
#include <octjordan/verify.hpp>

#include <json.hpp>

#include <string>

namespace octjordan {

using nlohmann::json;

// Prime-field scalars travel as decimal strings, complex scalars as [re, im].
json to_json(Fp x);
json to_json(cplx x);
Fp fp_from_json(const json& j);
cplx cplx_from_json(const json& j);  // accepts a number or [re, im]

template <class S>
json to_json(const Vec<S>& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

template <class S>
json to_json(const Mat<S>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

// {"level", "lambda": [3], "a", "b", "c": [2^level]}
template <class S>
json to_json(const HermitianTriple<S>& A) {
  json lam = json::array();
  for (const auto& l : A.lambda) lam.push_back(to_json(l));
  return {{"level", A.level()}, {"lambda", lam}, {"a", to_json(A.a)}, {"b", to_json(A.b)}, {"c", to_json(A.c)}};
}

// throws std::invalid_argument on schema errors
template <class S>
HermitianTriple<S> triple_from_json(const json& j);

Mat<cplx> cmat_from_json(const json& j);

json to_json(const SuiteReport& r);
json to_json(const AutDimReport& r);
json to_json(const CorankCensus& c);
json to_json(const TransformWord& w);
TransformWord word_from_json(const json& j);

std::string census_csv(const CorankCensus& c);

// sorted keys, two-space indent, trailing newline
std::string canonical(const json& j);

json read_json_file(const std::string& path);  // std::invalid_argument on missing file or bad JSON

}  // namespace octjordan
