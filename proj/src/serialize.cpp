// Copyright 2026 The cherednik authors
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

#include "cherednik/serialize.hpp"

namespace cherednik {

using nlohmann::json;

json field_element_to_json(const FieldElement& c) {
  if (c.is_rational()) return rat_to_string(c.rational_value());
  json arr = json::array();
  for (const auto& r : c.coeffs()) arr.push_back(rat_to_string(r));
  return arr;
}

FieldElement field_element_from_json(const json& j, const FieldContextPtr& ctx) {
  if (j.is_string()) return FieldElement(rat_from_string(j.get<std::string>()));
  if (!j.is_array()) throw std::invalid_argument("bad coefficient encoding");
  if (!ctx) throw std::invalid_argument("extension coefficient without a field context");
  std::vector<Rat> coeffs;
  for (const auto& e : j) coeffs.push_back(rat_from_string(e.get<std::string>()));
  return FieldElement::extension(ctx, std::move(coeffs));
}

json field_context_to_json(const FieldContextPtr& ctx) {
  json j;
  if (!ctx) {
    j["kind"] = "Q";
    return j;
  }
  j["kind"] = ctx->kind() == FieldContext::Kind::Sqrt ? "Qsqrt" : "cyclotomic";
  j["param"] = ctx->param();
  return j;
}

FieldContextPtr field_context_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Q") return nullptr;
  long param = j.at("param").get<long>();
  if (kind == "Qsqrt") return FieldContext::sqrt_ext(param);
  if (kind == "cyclotomic") return FieldContext::cyclotomic(param);
  throw std::invalid_argument("unknown field kind: " + kind);
}

json poly_to_json(const MultiPoly& p) {
  json j;
  j["vars"] = p.nvars();
  FieldContextPtr ctx;
  for (const auto& [m, c] : p.terms())
    if (c.context()) ctx = c.context();
  j["field"] = field_context_to_json(ctx);
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    t["exp"] = m;
    t["coef"] = field_element_to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

MultiPoly poly_from_json(const json& j) {
  int nvars = j.at("vars").get<int>();
  FieldContextPtr ctx = field_context_from_json(j.at("field"));
  MultiPoly p(nvars);
  for (const auto& t : j.at("terms")) {
    Monomial m = t.at("exp").get<Monomial>();
    if (static_cast<int>(m.size()) != nvars) throw std::invalid_argument("exponent arity mismatch");
    p.add_term(m, field_element_from_json(t.at("coef"), ctx));
  }
  return p;
}

namespace {

json poly_list_to_json(const std::vector<MultiPoly>& v) {
  json arr = json::array();
  for (const auto& p : v) arr.push_back(poly_to_json(p));
  return arr;
}

std::vector<MultiPoly> poly_list_from_json(const json& arr) {
  std::vector<MultiPoly> v;
  for (const auto& e : arr) v.push_back(poly_from_json(e));
  return v;
}

json poly_matrix_to_json(const PolyMatrix& m) {
  json arr = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m.at(r, c)));
    arr.push_back(std::move(row));
  }
  return arr;
}

PolyMatrix poly_matrix_from_json(const json& arr, int nvars) {
  int rows = static_cast<int>(arr.size());
  int cols = rows == 0 ? 0 : static_cast<int>(arr[0].size());
  PolyMatrix m(rows, cols, nvars);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = poly_from_json(arr[r][c]);
  return m;
}

}  // namespace

json frame_to_json(const SaitoFrame& frame) {
  json j;
  j["group"] = group_type_name(frame.type) + std::to_string(frame.rank);
  j["rank"] = frame.rank;
  j["h"] = frame.h;
  j["degrees"] = frame.degrees;
  j["t"] = poly_list_to_json(frame.t);
  j["t_restricted"] = poly_list_to_json(frame.t_restricted);
  j["g"] = poly_matrix_to_json(frame.g);
  j["U"] = poly_matrix_to_json(compute_U(frame));
  json lam = json::array();
  for (const auto& r : frame.lambda) lam.push_back(rat_to_string(r));
  j["lambda"] = std::move(lam);
  return j;
}

SaitoFrame frame_from_json(const json& j) {
  SaitoFrame frame;
  std::string group = j.at("group").get<std::string>();
  frame.type = parse_group(group).type();
  frame.rank = j.at("rank").get<int>();
  frame.h = j.at("h").get<int>();
  frame.degrees = j.at("degrees").get<std::vector<int>>();
  frame.t = poly_list_from_json(j.at("t"));
  frame.t_restricted = poly_list_from_json(j.at("t_restricted"));
  frame.g = poly_matrix_from_json(j.at("g"), frame.rank);
  for (const auto& e : j.at("lambda")) frame.lambda.push_back(rat_from_string(e.get<std::string>()));
  return frame;
}

json family_to_json(const SingularFamily& fam) {
  json j;
  j["beta"] = fam.beta;
  j["m"] = fam.m;
  j["c"] = rat_to_string(fam.c);
  j["degree"] = fam.degree;
  j["xi"] = poly_list_to_json(fam.xi);
  j["q"] = poly_list_to_json(fam.q);
  j["Q"] = poly_to_json(fam.q_potential);
  j["Q_flat"] = poly_to_json(fam.q_potential_flat);
  return j;
}

SingularFamily family_from_json(const json& j) {
  SingularFamily fam;
  fam.beta = j.at("beta").get<int>();
  fam.m = j.at("m").get<int>();
  fam.c = rat_from_string(j.at("c").get<std::string>());
  fam.degree = j.at("degree").get<int>();
  fam.xi = poly_list_from_json(j.at("xi"));
  fam.q = poly_list_from_json(j.at("q"));
  fam.q_potential = poly_from_json(j.at("Q"));
  fam.q_potential_flat = poly_from_json(j.at("Q_flat"));
  return fam;
}

}  // namespace cherednik
