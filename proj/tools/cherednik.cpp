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

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "cherednik/dunkl.hpp"
#include "cherednik/residues.hpp"
#include "cherednik/serialize.hpp"
#include "cherednik/shift.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace cherednik;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCertFail = 1;
constexpr int kExitUsage = 2;

std::string format_choice = "text";

void emit(const json& report) {
  if (format_choice == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  // aligned plain text: one "key: value" line per top-level field
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it->is_string())
      std::cout << it.key() << ": " << it->get<std::string>() << "\n";
    else
      std::cout << it.key() << ": " << it->dump() << "\n";
  }
}

std::string poly_text(const MultiPoly& p) { return p.to_string(); }

json poly_report(const MultiPoly& p) {
  if (format_choice == "json") return poly_to_json(p);
  return poly_text(p);
}

fs::path cache_dir() {
  const char* env = std::getenv("CHEREDNIK_CACHE");
  return fs::path(env ? env : "./.cache");
}

// FNV-1a over the canonical group descriptor; cache keys survive renames of
// the group string itself only if the descriptor is unchanged.
std::string descriptor_hash(const RootSystem& rs) {
  json desc;
  desc["degrees"] = rs.degrees();
  desc["h"] = rs.coxeter_number();
  json roots = json::array();
  for (const auto& r : rs.roots()) {
    json row = json::array();
    for (const auto& c : r) row.push_back(c.to_string());
    roots.push_back(std::move(row));
  }
  desc["roots"] = std::move(roots);
  std::string s = desc.dump();
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

SaitoFrame cached_frame(const RootSystem& rs, bool* cache_hit = nullptr) {
  fs::path dir = cache_dir();
  fs::path file = dir / ("frame-" + rs.name() + "-" + descriptor_hash(rs) + ".json");
  if (fs::exists(file)) {
    std::ifstream in(file);
    json j;
    in >> j;
    if (cache_hit) *cache_hit = true;
    return frame_from_json(j);
  }
  SaitoFrame frame = saito_frame(rs);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!ec) {
    std::ofstream out(file);
    out << frame_to_json(frame).dump() << "\n";
  }
  if (cache_hit) *cache_hit = false;
  return frame;
}

long timed_ms(const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  body();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
}

int cmd_roots(const std::string& group) {
  RootSystem rs = parse_group(group);
  json j;
  j["command"] = "roots";
  j["group"] = rs.name();
  j["rank"] = rs.rank();
  j["ambient"] = rs.ambient();
  j["h"] = rs.coxeter_number();
  j["degrees"] = rs.degrees();
  json roots = json::array();
  for (int i = 0; i < rs.num_roots(); ++i) {
    json row;
    json coords = json::array();
    for (const auto& c : rs.root(i)) coords.push_back(c.to_string());
    row["root"] = std::move(coords);
    row["norm2"] = rs.norm2(i).to_string();
    roots.push_back(std::move(row));
  }
  j["num_roots"] = rs.num_roots();
  j["roots"] = std::move(roots);
  emit(j);
  return kExitOk;
}

int cmd_saito(const std::string& group, const std::string& out_path) {
  RootSystem rs = parse_group(group);
  bool hit = false;
  SaitoFrame frame;
  long ms = timed_ms([&] { frame = cached_frame(rs, &hit); });
  SaitoVerification v = verify_saito(rs, frame);
  json jf = frame_to_json(frame);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << jf.dump(2) << "\n";
  }
  json j;
  j["command"] = "saito";
  j["group"] = rs.name();
  j["degrees"] = frame.degrees;
  j["h"] = frame.h;
  j["verified"] = v.ok;
  if (!v.ok) j["failures"] = v.failures;
  j["cache_hit"] = hit;
  j["ms"] = ms;
  if (out_path.empty() && format_choice == "json") j["frame"] = jf;
  emit(j);
  return v.ok ? kExitOk : kExitCertFail;
}

int cmd_singular(const std::string& group, int beta, int m, bool verify,
                 const std::string& json_out) {
  RootSystem rs = parse_group(group);
  if (beta < 1 || beta > rs.rank()) {
    std::cerr << "beta must be in 1.." << rs.rank() << "\n";
    return kExitUsage;
  }
  SaitoFrame frame = cached_frame(rs);
  SingularFamily fam;
  long ms = timed_ms([&] { fam = singular_family(rs, frame, beta - 1, m); });
  json j;
  j["command"] = "singular";
  j["group"] = rs.name();
  j["beta"] = beta;
  j["m"] = m;
  j["c"] = rat_to_string(fam.c);
  j["degree"] = fam.degree;
  j["ms"] = ms;
  bool ok = true;
  if (verify) {
    json checks = json::array();
    for (size_t i = 0; i < fam.q.size(); ++i) {
      SingularCertificate cert = is_singular(rs, FieldElement(fam.c), fam.q[i]);
      ok = ok && cert.singular;
      json ch;
      ch["q"] = static_cast<int>(i + 1);
      ch["singular"] = cert.singular;
      if (!cert.singular) {
        json res = json::array();
        for (const auto& r : cert.residuals) res.push_back(poly_text(r));
        ch["residuals"] = std::move(res);
      }
      checks.push_back(std::move(ch));
    }
    j["verified"] = ok;
    j["checks"] = std::move(checks);
  }
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    out << family_to_json(fam).dump(2) << "\n";
  } else {
    json qs = json::array();
    for (const auto& q : fam.q) qs.push_back(poly_report(q));
    j["q"] = std::move(qs);
    j["Q"] = poly_report(fam.q_potential);
  }
  emit(j);
  return ok ? kExitOk : kExitCertFail;
}

int cmd_periods(const std::string& group, const std::string& nu_str, int degree) {
  RootSystem rs = parse_group(group);
  FieldElement nu(rat_from_string(nu_str));
  SaitoFrame frame = cached_frame(rs);
  std::vector<MultiPoly> basis;
  long ms = timed_ms([&] { basis = homogeneous_twisted_periods(rs, frame, nu, degree); });
  json j;
  j["command"] = "periods";
  j["group"] = rs.name();
  j["nu"] = nu_str;
  j["degree"] = degree;
  j["dimension"] = static_cast<int>(basis.size());
  j["ms"] = ms;
  json arr = json::array();
  for (const auto& p : basis) arr.push_back(poly_report(p));
  j["basis"] = std::move(arr);
  emit(j);
  return kExitOk;
}

int cmd_residue(const std::string& kind_str, int rank, int s, int m) {
  ResidueKind kind = residue_kind_from_string(kind_str);
  MultiPoly p = residue_twisted_period(kind, rank, s, m);
  json j;
  j["command"] = "residue";
  j["kind"] = residue_kind_name(kind);
  j["rank"] = rank;
  j["s"] = s;
  j["m"] = m;
  j["degree"] = p.degree();
  j["poly"] = poly_report(p);
  emit(j);
  return kExitOk;
}

int cmd_complex(int n, long ell, long q, long s, long m, bool verify) {
  ComplexGroupSpec spec(n, ell, q, s, m);
  std::vector<MultiPoly> f = complex_singular_family(spec);
  json j;
  j["command"] = "complex";
  j["n"] = n;
  j["ell"] = ell;
  j["q"] = q;
  j["s"] = s;
  j["m"] = m;
  j["nu"] = rat_to_string(spec.nu);
  json cs = json::array();
  for (const auto& cb : spec.c) cs.push_back(rat_to_string(cb));
  j["c"] = std::move(cs);
  json arr = json::array();
  for (const auto& p : f) arr.push_back(poly_report(p));
  j["family"] = std::move(arr);
  bool ok = true;
  if (verify) {
    bool action = complex_group_action_check(spec, f);
    bool singular = true;
    for (int i = 0; i < n && singular; ++i)
      for (int jj = 0; jj < n; ++jj)
        if (!complex_dunkl_apply(spec, i, f[jj]).is_zero()) {
          singular = false;
          break;
        }
    ok = action && singular;
    j["group_action_ok"] = action;
    j["singular"] = singular;
    j["verified"] = ok;
  }
  emit(j);
  return ok ? kExitOk : kExitCertFail;
}

int cmd_verify(const std::string& group, const std::string& c_str, const std::string& poly_path) {
  RootSystem rs = parse_group(group);
  FieldElement c(rat_from_string(c_str));
  std::ifstream in(poly_path);
  if (!in) {
    std::cerr << "cannot read " << poly_path << "\n";
    return kExitUsage;
  }
  json pj;
  in >> pj;
  MultiPoly p = poly_from_json(pj);
  if (p.nvars() != rs.ambient()) {
    std::cerr << "polynomial has " << p.nvars() << " variables, expected " << rs.ambient() << "\n";
    return kExitUsage;
  }
  SingularCertificate cert = is_singular(rs, c, p);
  json j;
  j["command"] = "verify";
  j["group"] = rs.name();
  j["c"] = c_str;
  j["singular"] = cert.singular;
  json res = json::array();
  for (const auto& r : cert.residuals) res.push_back(poly_report(r));
  j["residuals"] = std::move(res);
  emit(j);
  return cert.singular ? kExitOk : kExitCertFail;
}

int cmd_selftest() {
  json checks = json::array();
  bool all = true;
  auto check = [&](const std::string& name, bool ok) {
    json c;
    c["name"] = name;
    c["pass"] = ok;
    checks.push_back(std::move(c));
    all = all && ok;
  };
  long ms = timed_ms([&] {
    for (std::string g : {"A2", "B2", "D3"}) {
      RootSystem rs = parse_group(g);
      SaitoFrame frame = cached_frame(rs);
      check(g + " frame", verify_saito(rs, frame).ok);
      SingularFamily fam = singular_family(rs, frame, 0, 0);
      bool sing = true;
      for (const auto& q : fam.q) sing = sing && is_singular(rs, FieldElement(fam.c), q).singular;
      check(g + " family beta=1 m=0", sing);
    }
    {
      RootSystem rs = parse_group("B2");
      MultiPoly p = residue_twisted_period(ResidueKind::B, 2, 2, 0);
      SaitoFrame frame = cached_frame(rs);
      check("B2 residue matches frame t1", p == frame.t[0].monic());
    }
    {
      ComplexGroupSpec spec(2, 2, 1, 0, 0);
      auto f = complex_singular_family(spec);
      bool dz = true;
      for (int i = 0; i < 2; ++i)
        for (int jj = 0; jj < 2; ++jj) dz = dz && complex_dunkl_apply(spec, i, f[jj]).is_zero();
      check("G(2,1,2) family", dz && complex_group_action_check(spec, f));
    }
  });
  json j;
  j["command"] = "selftest";
  j["pass"] = all;
  j["ms"] = ms;
  j["checks"] = std::move(checks);
  emit(j);
  return all ? kExitOk : kExitCertFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact singular polynomials of rational Cherednik algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format_choice, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string group, out_path, nu_str, c_str, poly_path, kind_str, json_out;
  int beta = 1, m = 0, degree = 0, rank = 1, s_int = 0;
  long n_l = 1, ell = 2, q_l = 1, s_l = 0, m_l = 0;
  bool verify_flag = false;

  auto* roots = app.add_subcommand("roots", "Root system descriptor");
  roots->add_option("--group", group)->required();

  auto* saito = app.add_subcommand("saito", "Flat coordinate frame");
  saito->add_option("--group", group)->required();
  saito->add_option("--out", out_path);

  auto* singular = app.add_subcommand("singular", "Singular polynomial family");
  singular->add_option("--group", group)->required();
  singular->add_option("--beta", beta)->required();
  singular->add_option("--m", m);
  singular->add_flag("--verify", verify_flag);
  singular->add_option("--json", json_out);

  auto* periods = app.add_subcommand("periods", "Homogeneous twisted periods");
  periods->add_option("--group", group)->required();
  periods->add_option("--nu", nu_str)->required();
  periods->add_option("--degree", degree)->required();

  auto* residue = app.add_subcommand("residue", "Closed-form residue period");
  residue->add_option("--kind", kind_str)->required();
  residue->add_option("--rank", rank)->required();
  residue->add_option("--s", s_int);
  residue->add_option("--m", m);

  auto* complex_cmd = app.add_subcommand("complex", "G(ell,1,n) singular family");
  complex_cmd->add_option("--n", n_l)->required();
  complex_cmd->add_option("--ell", ell)->required();
  complex_cmd->add_option("--q", q_l)->required();
  complex_cmd->add_option("--s", s_l);
  complex_cmd->add_option("--m", m_l);
  complex_cmd->add_flag("--verify", verify_flag);

  auto* verify = app.add_subcommand("verify", "Certify a polynomial as singular");
  verify->add_option("--group", group)->required();
  verify->add_option("--c", c_str)->required();
  verify->add_option("--poly", poly_path)->required();

  app.add_subcommand("selftest", "Hermetic round-trip checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (roots->parsed()) return cmd_roots(group);
    if (saito->parsed()) return cmd_saito(group, out_path);
    if (singular->parsed()) return cmd_singular(group, beta, m, verify_flag, json_out);
    if (periods->parsed()) return cmd_periods(group, nu_str, degree);
    if (residue->parsed()) return cmd_residue(kind_str, rank, s_int, m);
    if (complex_cmd->parsed())
      return cmd_complex(static_cast<int>(n_l), ell, q_l, s_l, m_l, verify_flag);
    if (verify->parsed()) return cmd_verify(group, c_str, poly_path);
    return cmd_selftest();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertFail;
  }
}
