// Copyright 2026 The cotsum Authors
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
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cotsum/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cotsum/genfun.hpp"
#include "cotsum/pathforest.hpp"
#include "cotsum/seqlab.hpp"

namespace cotsum {

using nlohmann::json;

namespace {

std::string decimal(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

std::string approx(const Rational& r) { return "~" + decimal(r.to_double()); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  return out + "\"";
}

std::vector<std::size_t> visible_columns(const Report& r, bool text) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < r.columns.size(); ++i)
    if (text || !r.columns[i].text_only) idx.push_back(i);
  return idx;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.title << "\n";
  const auto idx = visible_columns(r, true);
  if (!idx.empty()) {
    std::vector<std::size_t> width(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
      width[j] = r.columns[idx[j]].name.size();
      for (const auto& row : r.rows) width[j] = std::max(width[j], row[idx[j]].size());
    }
    auto line = [&](auto cell) {
      std::string s;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        std::string v = cell(j);
        if (j + 1 < idx.size()) v.resize(width[j] + 2, ' ');
        s += v;
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      os << s << "\n";
    };
    os << "\n";
    line([&](std::size_t j) { return r.columns[idx[j]].name; });
    line([&](std::size_t j) { return std::string(width[j], '-'); });
    for (const auto& row : r.rows) line([&](std::size_t j) { return row[idx[j]]; });
  }
  if (!r.notes.empty()) os << "\n";
  for (const auto& note : r.notes) os << note << "\n";
  return os.str();
}

std::string render_csv(const Report& r) {
  std::ostringstream os;
  const auto idx = visible_columns(r, false);
  for (std::size_t j = 0; j < idx.size(); ++j) os << (j ? "," : "") << csv_field(r.columns[idx[j]].name);
  os << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t j = 0; j < idx.size(); ++j) os << (j ? "," : "") << csv_field(row[idx[j]]);
    os << "\n";
  }
  return os.str();
}

json to_json(std::span<const Integer> values) {
  json a = json::array();
  for (const Integer& v : values) a.push_back(to_string(v));
  return a;
}

std::vector<Column> columns(std::initializer_list<const char*> names) {
  std::vector<Column> out;
  for (const char* n : names) out.push_back({n, false});
  return out;
}

Report integer_table(std::string title, const std::vector<std::vector<Integer>>& rows, int first_k) {
  Report r;
  r.title = std::move(title);
  r.columns = columns({"n", "k", "value"});
  json table = json::array();
  for (std::size_t n = 0; n < rows.size(); ++n) {
    table.push_back(to_json(std::span<const Integer>(rows[n])));
    for (std::size_t k = static_cast<std::size_t>(first_k); k < rows[n].size(); ++k)
      r.rows.push_back({std::to_string(n), std::to_string(k), to_string(rows[n][k])});
  }
  r.body["table"] = std::move(table);
  return r;
}

Report poly_list(std::string title, const std::vector<RationalPoly>& polys, int first) {
  Report r;
  r.title = std::move(title);
  r.columns = columns({"n", "polynomial"});
  json a = json::array();
  for (std::size_t n = 0; n < polys.size(); ++n) {
    a.push_back(to_json(polys[n]));
    if (static_cast<int>(n) >= first) r.rows.push_back({std::to_string(n), poly_str(polys[n], "x")});
  }
  r.body["polynomials"] = std::move(a);
  return r;
}

Report series_report(std::string title, const RationalSeries& s) {
  Report r;
  r.title = std::move(title);
  r.columns = {{"m", false}, {"coefficient", false}, {"approx", true}};
  r.body["coefficients"] = to_json(s.coefficients());
  for (int m = 0; m <= s.order(); ++m)
    r.rows.push_back({std::to_string(m), s[static_cast<std::size_t>(m)].str(), approx(s[static_cast<std::size_t>(m)])});
  return r;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? std::string(sep) : "") + parts[i];
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  raise(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Text: return render_text(report);
    case Format::Json: return report.body.dump(2) + "\n";
    case Format::Csv: return render_csv(report);
  }
  return {};
}

json to_json(std::span<const Rational> values) {
  json a = json::array();
  for (const Rational& v : values) a.push_back(v.str());
  return a;
}

json to_json(const RationalPoly& p) { return to_json(p.coefficients()); }

std::string poly_str(const RationalPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational c = p.coefficient(static_cast<std::size_t>(d));
    if (c.is_zero()) continue;
    const Rational a = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = a == Rational(1);
    if (d == 0 || !unit) out += a.str();
    if (d >= 1) {
      if (!unit) out += " ";
      out += var;
      if (d >= 2) out += "^" + std::to_string(d);
    }
  }
  return out;
}

Report report_sum(int m, int n, const Rational& c, const std::vector<SumMethod>& methods) {
  const SumReport s = sum_report(m, n, c, methods);
  Report r;
  r.title = "S(" + std::to_string(m) + ", " + std::to_string(n) + ", arccot " + c.str() + ")";
  r.columns = {{"method", false}, {"value", false}, {"approx", true}, {"error", false}};
  r.body["m"] = m;
  r.body["n"] = n;
  r.body["cot"] = c.str();
  r.body["alpha"] = *s.alpha;
  json values = json::array();
  for (const SumValue& v : s.values) {
    json e = json::object();
    e["method"] = std::string(sum_method_name(v.method));
    if (v.exact) e["value"] = v.exact->str();
    else if (v.approx) e["value"] = *v.approx;
    else e["value"] = nullptr;
    if (!v.error.empty()) e["error"] = v.error;
    values.push_back(std::move(e));
    const std::string shown = v.exact ? v.exact->str() : (v.approx ? decimal(*v.approx) : "");
    r.rows.push_back({std::string(sum_method_name(v.method)), shown, v.approx ? "~" + decimal(*v.approx) : "", v.error});
  }
  r.body["values"] = std::move(values);
  r.body["agree"] = s.agree;
  r.ok = s.agree;
  r.notes.push_back(std::string("agreement: ") + (s.agree ? "true" : "false"));
  return r;
}

Report report_sum_float(int m, int n, double alpha) {
  const SumReport s = sum_report_float(m, n, alpha);
  Report r;
  r.title = "S(" + std::to_string(m) + ", " + std::to_string(n) + ", " + decimal(alpha) + ")";
  r.columns = columns({"method", "value"});
  r.body["m"] = m;
  r.body["n"] = n;
  r.body["alpha"] = alpha;
  r.body["values"] = json::array({json{{"method", "float"}, {"value", *s.values.front().approx}}});
  r.body["agree"] = true;
  r.rows.push_back({"float", decimal(*s.values.front().approx)});
  return r;
}

Report report_poly(int m, int n) {
  const CotPolynomial p = p_coeffs(m, n);
  Report r;
  r.title = "S(" + std::to_string(m) + ", " + std::to_string(n) + ", alpha) as a polynomial in x = cot alpha";
  r.columns = columns({"r", "p_r", "p_r(n)"});
  r.body["m"] = m;
  r.body["n"] = n;
  r.body["coefficients"] = to_json(p.coeffs);
  json in_n = json::array();
  for (int k = 0; k <= m; ++k) {
    const RationalPoly q = p_coeff_polynomial(m, k);
    in_n.push_back(to_json(q));
    if ((m - k) % 2 == 0) r.rows.push_back({std::to_string(k), p.coeffs[static_cast<std::size_t>(k)].str(), poly_str(q, "n")});
  }
  r.body["coefficients_in_n"] = std::move(in_n);
  r.notes.push_back("S = " + poly_str(RationalPoly(p.coeffs), "x"));
  return r;
}

Report report_seq(std::string_view kind, int max_n, std::string_view method) {
  require(max_n >= 0, ErrorCode::InvalidArgument, "--max must be >= 0");
  require(max_n <= 200, ErrorCode::TooLarge, "--max must be <= 200");
  Report r;
  const std::string label(kind);
  if (kind == "tangent" || kind == "stirling2") {
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(max_n) + 1);
    if (kind == "tangent") {
      require(max_n >= 1, ErrorCode::InvalidArgument, "tangent table needs --max >= 1");
      const TangentTable t = tangent_numbers(max_n);
      for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k) rows[static_cast<std::size_t>(n)].push_back(t.at(n, k));
      r = integer_table("higher tangent numbers T_n^(k)", rows, 1);
    } else {
      const Stirling2Table t = stirling2_table(max_n);
      for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k) rows[static_cast<std::size_t>(n)].push_back(t.at(n, k));
      r = integer_table("Stirling numbers of the second kind {n k}", rows, 0);
    }
  } else if (kind == "arctan") {
    require(max_n >= 1, ErrorCode::InvalidArgument, "arctangent table needs --max >= 1");
    const ArctanTable t = arctangent_numbers(max_n);
    std::vector<std::vector<Integer>> plain(static_cast<std::size_t>(max_n) + 1), hyper(plain.size());
    for (int n = 0; n <= max_n; ++n)
      for (int k = 0; k <= n; ++k) {
        plain[static_cast<std::size_t>(n)].push_back(t.at(n, k));
        hyper[static_cast<std::size_t>(n)].push_back(t.hyperbolic(n, k));
      }
    r = integer_table("arctangent numbers A_n^(k)", plain, 1);
    json h = json::array();
    for (const auto& row : hyper) h.push_back(to_json(std::span<const Integer>(row)));
    r.body["hyperbolic"] = std::move(h);
    r.columns.push_back({"hyperbolic", false});
    std::size_t i = 0;
    for (int n = 0; n <= max_n; ++n)
      for (int k = 1; k <= n; ++k) r.rows[i++].push_back(to_string(t.hyperbolic(n, k)));
  } else if (kind == "euler") {
    const std::vector<Integer> e = euler_zigzag(max_n);
    r.title = "Euler zigzag numbers E_n";
    r.columns = columns({"n", "value"});
    r.body["values"] = to_json(std::span<const Integer>(e));
    for (std::size_t n = 0; n < e.size(); ++n) r.rows.push_back({std::to_string(n), to_string(e[n])});
  } else if (kind == "bernoulli") {
    const std::vector<Rational> b = bernoulli_numbers(max_n);
    r.title = "Bernoulli numbers B_n";
    r.columns = {{"n", false}, {"value", false}, {"approx", true}};
    r.body["values"] = to_json(b);
    for (std::size_t n = 0; n < b.size(); ++n) r.rows.push_back({std::to_string(n), b[n].str(), approx(b[n])});
  } else if (kind == "derivpoly") {
    const DerivativePolySet p = derivative_polys(max_n, parse_derivative_poly_method(method));
    r = poly_list("derivative polynomials P_n(x)", p.polys, 0);
    r.body["method"] = std::string(method);
  } else if (kind == "tanpoly") {
    require(max_n >= 1, ErrorCode::InvalidArgument, "tangent polynomials need --max >= 1");
    r = poly_list("tangent polynomials T_n(x)", tangent_polys(max_n), 1);
  } else {
    raise(ErrorCode::InvalidArgument, "unknown sequence '" + label + "'");
  }
  r.body["kind"] = label;
  r.body["max"] = max_n;
  return r;
}

Report report_genfun(std::string_view kind, int n, int order, const Rational& c, std::string_view method) {
  require(order >= 0, ErrorCode::InvalidArgument, "--order must be >= 0");
  require(order <= 400, ErrorCode::TooLarge, "--order must be <= 400");
  Report r;
  if (kind == "F") {
    r = series_report("F_n(z) = sum S(m, n, arccot " + c.str() + ") z^m", F_series(n, c, order).coeffs);
    r.body["cot"] = c.str();
  } else if (kind == "Q") {
    r = series_report("Q_n(z) = tan(n arctan z)/z", Q_series(n, order, parse_q_method(method)));
    r.body["method"] = std::string(method);
  } else if (kind == "MB") {
    r = series_report("M_B(z) = Tr((I - z B_n)^-1)", M_B_series(n, order));
  } else {
    raise(ErrorCode::InvalidArgument, "unknown series '" + std::string(kind) + "'");
  }
  r.body["kind"] = std::string(kind);
  r.body["n"] = n;
  r.body["order"] = order;
  return r;
}

Report report_comb(std::string_view kind, int n, int m, int k, bool list) {
  Report r;
  r.body["kind"] = std::string(kind);
  r.body["n"] = n;
  r.body["m"] = m;
  if (kind == "dyck") {
    r.title = "d_(" + std::to_string(n) + "," + std::to_string(m) + ") from weighted Dyck paths";
    const Rational value = d_dyck(n, m);
    r.body["value"] = value.str();
    if (list) {
      r.columns = columns({"path", "factors", "weight"});
      json paths = json::array();
      for (const WeightedDyckPath& wp : weighted_dyck_paths(n, m)) {
        std::vector<std::string> f;
        for (const Rational& x : wp.factors) f.push_back(x.str());
        paths.push_back(json{{"path", wp.path.str()}, {"factors", f}, {"weight", wp.weight.str()}});
        r.rows.push_back({wp.path.str(), join(f, " * "), wp.weight.str()});
      }
      r.body["paths"] = std::move(paths);
    }
    r.notes.push_back("total = " + std::to_string(n) + " * (sum of weights) = " + value.str());
  } else if (kind == "trees") {
    r.title = "e_(" + std::to_string(n) + "," + std::to_string(m) + ") from rooted binary trees";
    const Rational value = e_trees(n, m);
    r.body["value"] = value.str();
    if (list) {
      r.columns = columns({"tree", "path weights", "weight"});
      json trees = json::array();
      for (const Tree& t : enumerate_trees(n, m)) {
        std::vector<std::string> omegas;
        for (int f : tree_path_firstborns(t)) omegas.push_back(std::to_string(n - f));
        const Rational w = tree_weight(t, n);
        trees.push_back(json{{"tree", tree_str(t)}, {"path_weights", omegas}, {"weight", w.str()}});
        r.rows.push_back({tree_str(t), join(omegas, " * "), w.str()});
      }
      r.body["trees"] = std::move(trees);
    }
    r.notes.push_back("total = " + value.str());
  } else if (kind == "forest") {
    require(!list, ErrorCode::InvalidArgument, "--list is available for dyck and trees only");
    r.title = "p_(" + std::to_string(m) + "," + std::to_string(k) + ")(" + std::to_string(n) + ") from circular forests";
    const Rational value = p_forest(m, k, n);
    r.body["k"] = k;
    r.body["value"] = value.str();
    r.notes.push_back("total = " + value.str());
  } else if (kind == "dtable") {
    r.title = "d_(n,m) = Tr(J_n B_n^(2m))";
    const auto d = d_table(n, m);
    r.columns = columns({"n", "m", "value"});
    json table = json::array();
    for (int a = 1; a <= n; ++a) {
      table.push_back(to_json(d[static_cast<std::size_t>(a)]));
      for (int b = 0; b <= m; ++b) r.rows.push_back({std::to_string(a), std::to_string(b), d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].str()});
    }
    r.body["table"] = std::move(table);
  } else {
    raise(ErrorCode::InvalidArgument, "unknown combinatorial family '" + std::string(kind) + "'");
  }
  if (r.columns.empty()) {
    r.columns = columns({"value"});
    r.rows.push_back({r.body["value"].get<std::string>()});
    r.notes.clear();
  }
  return r;
}

Report report_zeta(int k, const std::vector<int>& ns) {
  require(!ns.empty(), ErrorCode::InvalidArgument, "--n-list must not be empty");
  const double reference = zeta_reference(k);
  Report r;
  r.title = "zeta(" + std::to_string(2 * k) + ") from Tr(B_n^" + std::to_string(2 * k) + ")";
  r.columns = columns({"n", "approx", "error", "error ratio"});
  r.body["k"] = k;
  r.body["reference"] = reference;
  json rows = json::array();
  double previous = NAN;
  for (int n : ns) {
    const double v = zeta_approx(k, n);
    const double err = reference - v;
    const double ratio = previous / err;
    json row{{"n", n}, {"approx", v}, {"error", err}};
    if (std::isfinite(ratio)) row["ratio"] = ratio;
    rows.push_back(std::move(row));
    r.rows.push_back({std::to_string(n), decimal(v), decimal(err), std::isfinite(ratio) ? decimal(ratio) : ""});
    previous = err;
  }
  r.body["rows"] = std::move(rows);
  r.notes.push_back("reference zeta(" + std::to_string(2 * k) + ") = " + decimal(reference));
  return r;
}

Report report_verify(const VerifyOptions& options) {
  const VerifyResult v = run_verification(options);
  Report r;
  r.title = "verification suite " + std::string(verify_suite_name(options.suite));
  r.columns = columns({"suite", "check", "status", "cases", "detail"});
  json checks = json::array();
  json failures = json::array();
  for (const CheckResult& c : v.checks) {
    checks.push_back(json{{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"cases", c.cases}});
    if (!c.passed) failures.push_back(json{{"suite", c.suite}, {"name", c.name}, {"detail", c.detail}});
    r.rows.push_back({c.suite, c.name, c.passed ? "pass" : "FAIL", std::to_string(c.cases), c.detail});
  }
  r.body["suite"] = std::string(verify_suite_name(options.suite));
  r.body["max_m"] = options.max_m;
  r.body["max_n"] = options.max_n;
  r.body["checks"] = std::move(checks);
  r.body["failures"] = std::move(failures);
  r.body["diagnostics"] = v.diagnostics;
  r.body["passed"] = v.passed();
  r.ok = v.passed();
  for (const std::string& d : v.diagnostics) r.notes.push_back("diagnostic: " + d);
  r.notes.push_back(std::to_string(v.checks.size() - v.failures()) + "/" + std::to_string(v.checks.size()) + " checks passed");
  return r;
}

}  // namespace cotsum
