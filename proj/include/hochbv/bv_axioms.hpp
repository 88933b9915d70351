#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hochbv/errors.hpp"
#include "hochbv/scalar.hpp"

namespace hochbv {

using Vec = std::vector<Scalar>;
// Linear operator given by the images of the basis vectors.
using OperatorColumns = std::vector<Vec>;
// table[i][j] = value on the pair of basis vectors (e_i, e_j).
using BilinearTable = std::vector<std::vector<Vec>>;

namespace detail {

inline Vec vzero(const Ring& ring, std::size_t n) { return Vec(n, Scalar::zero(ring)); }

inline bool vis_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline void vaxpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

inline Vec vscale(Vec v, const Scalar& a) {
  for (auto& x : v) x *= a;
  return v;
}

inline Vec vadd(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec vsub(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Scalar parse_scalar(const Ring& ring, const nlohmann::json& j) {
  if (j.is_number_integer()) return Scalar(ring, j.get<long long>());
  if (!j.is_string()) fail(ErrorCode::InvalidSpec, "coefficient must be an integer or a string");
  try {
    return Scalar(ring, mpq_class(j.get<std::string>()));
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::InvalidSpec, "bad coefficient " + j.get<std::string>());
  }
}

}  // namespace detail

// Finite-dimensional graded algebra over a field, homogeneous basis, lower degrees.
class GradedAlgebraSpec {
 public:
  std::string name;
  Ring ring = Ring::rationals();
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::size_t unit = 0;
  BilinearTable mult;
  std::optional<OperatorColumns> delta;
  std::optional<BilinearTable> bracket;
  std::optional<bool> expect_bv;
  // set for truncations: components of lower degree were dropped
  std::optional<int> lowest_degree;

  std::size_t dim() const { return names.size(); }
  Vec zero() const { return detail::vzero(ring, dim()); }
  Vec basis(std::size_t i) const {
    Vec v = zero();
    v[i] = Scalar::one(ring);
    return v;
  }
  Scalar sign(int e) const { return sign_scalar(ring, e); }

  bool in_window(std::initializer_list<int> ds) const {
    if (!lowest_degree) return true;
    for (int d : ds)
      if (d < *lowest_degree) return false;
    return true;
  }

  std::size_t index(const std::string& n) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return i;
    fail(ErrorCode::InvalidSpec, "unknown basis element " + n);
  }

  static Vec apply_bilinear(const BilinearTable& t, const Vec& a, const Vec& b) {
    Vec out = detail::vzero(a.front().ring(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (!b[j].is_zero()) detail::vaxpy(out, a[i] * b[j], t[i][j]);
    }
    return out;
  }
  static Vec apply(const OperatorColumns& op, const Vec& a) {
    Vec out = detail::vzero(a.front().ring(), a.size());
    for (std::size_t j = 0; j < a.size(); ++j) detail::vaxpy(out, a[j], op[j]);
    return out;
  }

  Vec mul(const Vec& a, const Vec& b) const { return apply_bilinear(mult, a, b); }
  Vec mul(std::size_t i, std::size_t j) const { return mult[i][j]; }

  std::string format(const Vec& v) const {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += (v[i].is_one() ? "" : v[i].to_string() + "*") + names[i];
    }
    return out.empty() ? "0" : out;
  }

  // True when v is zero or homogeneous of degree deg.
  bool homogeneous(const Vec& v, int deg) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero() && degrees[i] != deg) return false;
    return true;
  }

  // Degree additivity, unit law, associativity, operator degrees.
  void validate() const {
    const std::size_t n = dim();
    if (degrees.size() != n || mult.size() != n || unit >= n) fail(ErrorCode::InvalidSpec, name + ": inconsistent sizes");
    if (degrees[unit] != 0) fail(ErrorCode::InvalidSpec, name + ": unit must have degree 0");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!homogeneous(mult[i][j], degrees[i] + degrees[j]))
          fail(ErrorCode::InvalidSpec, name + ": product " + names[i] + "*" + names[j] + " is not degree-additive");
        if (bracket && !homogeneous((*bracket)[i][j], degrees[i] + degrees[j] + 1))
          fail(ErrorCode::InvalidSpec, name + ": bracket {" + names[i] + "," + names[j] + "} is not of degree 1");
      }
    for (std::size_t i = 0; i < n; ++i)
      if (mult[unit][i] != basis(i) || mult[i][unit] != basis(i)) fail(ErrorCode::InvalidSpec, name + ": unit law fails at " + names[i]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (in_window({degrees[i] + degrees[j], degrees[j] + degrees[k], degrees[i] + degrees[j] + degrees[k]}) &&
              mul(mult[i][j], basis(k)) != mul(basis(i), mult[j][k]))
            fail(ErrorCode::InvalidSpec, name + ": product not associative at " + names[i] + "," + names[j] + "," + names[k]);
    if (delta) {
      if (delta->size() != n) fail(ErrorCode::InvalidSpec, name + ": delta has wrong size");
      for (std::size_t i = 0; i < n; ++i)
        if (!homogeneous((*delta)[i], degrees[i] + 1)) fail(ErrorCode::InvalidSpec, name + ": delta is not of degree 1 on " + names[i]);
    }
  }

  static GradedAlgebraSpec from_json(const nlohmann::json& j) {
    GradedAlgebraSpec s;
    s.name = j.value("name", "");
    s.ring = Ring::parse(j.value("ring", "q"));
    if (!s.ring.is_field()) fail(ErrorCode::InvalidSpec, "graded specs need a field");
    for (const auto& b : j.at("basis")) {
      s.names.push_back(b.at("name").get<std::string>());
      s.degrees.push_back(b.at("degree").get<int>());
    }
    const std::size_t n = s.dim();
    s.unit = s.index(j.value("unit", s.names.front()));
    auto read_vec = [&](const nlohmann::json& v) {
      Vec out = s.zero();
      for (const auto& [k, c] : v.items()) out[s.index(k)] += detail::parse_scalar(s.ring, c);
      return out;
    };
    auto read_table = [&](const nlohmann::json& entries, bool with_unit) {
      BilinearTable t(n, std::vector<Vec>(n, s.zero()));
      if (with_unit)
        for (std::size_t i = 0; i < n; ++i) t[s.unit][i] = t[i][s.unit] = s.basis(i);
      for (const auto& e : entries) t[s.index(e.at(0))][s.index(e.at(1))] = read_vec(e.at(2));
      return t;
    };
    s.mult = read_table(j.value("products", nlohmann::json::array()), true);
    if (j.contains("delta")) {
      OperatorColumns d(n, s.zero());
      for (const auto& [k, v] : j.at("delta").items()) d[s.index(k)] = read_vec(v);
      s.delta = d;
    }
    if (j.contains("bracket")) s.bracket = read_table(j.at("bracket"), false);
    if (j.contains("expect_bv")) s.expect_bv = j.at("expect_bv").get<bool>();
    if (j.contains("lowest_degree")) s.lowest_degree = j.at("lowest_degree").get<int>();
    s.validate();
    return s;
  }

  nlohmann::json to_json() const {
    auto vec_json = [&](const Vec& v) {
      nlohmann::json o = nlohmann::json::object();
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) o[names[i]] = v[i].to_string();
      return o;
    };
    auto table_json = [&](const BilinearTable& t, bool skip_unit) {
      nlohmann::json a = nlohmann::json::array();
      for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t k = 0; k < dim(); ++k) {
          if (skip_unit && (i == unit || k == unit)) continue;
          if (!detail::vis_zero(t[i][k])) a.push_back({names[i], names[k], vec_json(t[i][k])});
        }
      return a;
    };
    nlohmann::json j;
    j["name"] = name;
    j["ring"] = ring.to_string();
    j["basis"] = nlohmann::json::array();
    for (std::size_t i = 0; i < dim(); ++i) j["basis"].push_back({{"name", names[i]}, {"degree", degrees[i]}});
    j["unit"] = names[unit];
    j["products"] = table_json(mult, true);
    if (delta) {
      nlohmann::json d = nlohmann::json::object();
      for (std::size_t i = 0; i < dim(); ++i)
        if (!detail::vis_zero((*delta)[i])) d[names[i]] = vec_json((*delta)[i]);
      j["delta"] = d;
    }
    if (bracket) j["bracket"] = table_json(*bracket, false);
    if (expect_bv) j["expect_bv"] = *expect_bv;
    if (lowest_degree) j["lowest_degree"] = *lowest_degree;
    return j;
  }
};

// ---- reports

struct Violation {
  std::string axiom;
  std::vector<std::string> args;
  std::string lhs;
  std::string rhs;
};

struct AxiomReport {
  std::string check;
  std::string spec;
  std::size_t instances = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }

  void expect(const GradedAlgebraSpec& s, const std::string& axiom, std::vector<std::string> args, const Vec& lhs, const Vec& rhs) {
    ++instances;
    if (lhs != rhs) violations.push_back(Violation{axiom, std::move(args), s.format(lhs), s.format(rhs)});
  }

  nlohmann::json to_json() const {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : violations) v.push_back({{"axiom", x.axiom}, {"args", x.args}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    return {{"check", check}, {"spec", spec}, {"instances", instances}, {"status", passed() ? "pass" : "fail"}, {"violations", v}};
  }
};

// ---- generic bracket axioms

namespace detail {

inline void check_jacobi(const GradedAlgebraSpec& s, const BilinearTable& t, AxiomReport& r) {
  const std::size_t n = s.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const int da = s.degrees[a], db = s.degrees[b], dc = s.degrees[c];
        if (!s.in_window({db + dc + 1, da + db + 1, da + dc + 1, da + db + dc + 2})) continue;
        const Vec ea = s.basis(a), eb = s.basis(b), ec = s.basis(c);
        const Vec lhs = GradedAlgebraSpec::apply_bilinear(t, ea, t[b][c]);
        Vec rhs = GradedAlgebraSpec::apply_bilinear(t, t[a][b], ec);
        vaxpy(rhs, s.sign((s.degrees[a] + 1) * (s.degrees[b] + 1)), GradedAlgebraSpec::apply_bilinear(t, eb, t[a][c]));
        r.expect(s, "jacobi", {s.names[a], s.names[b], s.names[c]}, lhs, rhs);
      }
}

inline void check_poisson(const GradedAlgebraSpec& s, const BilinearTable& t, AxiomReport& r) {
  const std::size_t n = s.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const int da = s.degrees[a], db = s.degrees[b], dc = s.degrees[c];
        if (!s.in_window({db + dc, da + db + 1, da + dc + 1, da + db + dc + 1})) continue;
        const Vec lhs = GradedAlgebraSpec::apply_bilinear(t, s.basis(a), s.mult[b][c]);
        Vec rhs = s.mul(t[a][b], s.basis(c));
        vaxpy(rhs, s.sign((s.degrees[a] + 1) * s.degrees[b]), s.mul(s.basis(b), t[a][c]));
        r.expect(s, "poisson", {s.names[a], s.names[b], s.names[c]}, lhs, rhs);
      }
}

inline void check_antisymmetry(const GradedAlgebraSpec& s, const BilinearTable& t, AxiomReport& r) {
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b)
      r.expect(s, "antisymmetry", {s.names[a], s.names[b]}, t[a][b],
               vscale(t[b][a], -s.sign((s.degrees[a] + 1) * (s.degrees[b] + 1))));
}

inline void check_commutative(const GradedAlgebraSpec& s, AxiomReport& r) {
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b)
      r.expect(s, "commutative", {s.names[a], s.names[b]}, s.mult[a][b], vscale(s.mult[b][a], s.sign(s.degrees[a] * s.degrees[b])));
}

inline void require_square_zero(const GradedAlgebraSpec& s, const OperatorColumns& d, ErrorCode code, const std::string& what) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!vis_zero(GradedAlgebraSpec::apply(d, d[i])))
      fail(code, s.name + ": " + what + " does not square to zero on " + s.names[i]);
}

inline const OperatorColumns& require_delta(const GradedAlgebraSpec& s) {
  if (!s.delta) fail(ErrorCode::InvalidSpec, s.name + ": no delta operator");
  require_square_zero(s, *s.delta, ErrorCode::DeltaNotSquareZero, "delta");
  return *s.delta;
}

}  // namespace detail

// Graded commutative algebra plus antisymmetry, Jacobi and Poisson on all basis tuples.
inline AxiomReport check_gerstenhaber(const GradedAlgebraSpec& s, const BilinearTable& t) {
  AxiomReport r{"gerstenhaber", s.name, 0, {}};
  detail::check_commutative(s, r);
  detail::check_antisymmetry(s, t, r);
  detail::check_jacobi(s, t, r);
  detail::check_poisson(s, t, r);
  return r;
}

inline AxiomReport check_gerstenhaber(const GradedAlgebraSpec& s) {
  if (!s.bracket) fail(ErrorCode::MissingBracket, s.name + ": no bracket table");
  return check_gerstenhaber(s, *s.bracket);
}

// Generalized Loday-Gerstenhaber: Leibniz-Jacobi and Poisson, no commutativity.
inline AxiomReport check_loday_gerstenhaber(const GradedAlgebraSpec& s, const BilinearTable& t) {
  AxiomReport r{"loday-gerstenhaber", s.name, 0, {}};
  detail::check_jacobi(s, t, r);
  detail::check_poisson(s, t, r);
  return r;
}

inline AxiomReport check_lie(const GradedAlgebraSpec& s, const BilinearTable& t) {
  AxiomReport r{"lie", s.name, 0, {}};
  detail::check_antisymmetry(s, t, r);
  detail::check_jacobi(s, t, r);
  return r;
}

inline AxiomReport check_poisson_only(const GradedAlgebraSpec& s, const BilinearTable& t) {
  AxiomReport r{"poisson", s.name, 0, {}};
  detail::check_poisson(s, t, r);
  return r;
}

// ---- BV from a square-zero operator

// {a,b} = (-1)^{|a|}(Delta(ab) - (Delta a)b - (-1)^{|a|} a Delta(b))
inline BilinearTable bv_bracket_from_delta(const GradedAlgebraSpec& s) {
  const OperatorColumns& D = detail::require_delta(s);
  const std::size_t n = s.dim();
  BilinearTable t(n, std::vector<Vec>(n, s.zero()));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int da = s.degrees[a];
      Vec v = GradedAlgebraSpec::apply(D, s.mult[a][b]);
      v = detail::vsub(v, s.mul(D[a], s.basis(b)));
      detail::vaxpy(v, -s.sign(da), s.mul(s.basis(a), D[b]));
      t[a][b] = detail::vscale(v, s.sign(da));
    }
  return t;
}

// Delta(abc) = Delta(ab)c + (-1)^{|a|} a Delta(bc) + (-1)^{(|a|-1)|b|} b Delta(ac)
//              - (Delta a)bc - (-1)^{|a|} a(Delta b)c - (-1)^{|a|+|b|} ab(Delta c)
inline AxiomReport check_second_order(const GradedAlgebraSpec& s) {
  const OperatorColumns& D = detail::require_delta(s);
  AxiomReport r{"second-order", s.name, 0, {}};
  const std::size_t n = s.dim();
  auto Dv = [&](const Vec& v) { return GradedAlgebraSpec::apply(D, v); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const int x = s.degrees[a], y = s.degrees[b];
        const Vec ea = s.basis(a), eb = s.basis(b), ec = s.basis(c);
        const Vec lhs = Dv(s.mul(s.mult[a][b], ec));
        Vec rhs = s.mul(Dv(s.mult[a][b]), ec);
        detail::vaxpy(rhs, s.sign(x), s.mul(ea, Dv(s.mult[b][c])));
        detail::vaxpy(rhs, s.sign((x - 1) * y), s.mul(eb, Dv(s.mult[a][c])));
        detail::vaxpy(rhs, -Scalar::one(s.ring), s.mul(s.mul(D[a], eb), ec));
        detail::vaxpy(rhs, -s.sign(x), s.mul(s.mul(ea, D[b]), ec));
        detail::vaxpy(rhs, -s.sign(x + y), s.mul(s.mult[a][b], D[c]));
        r.expect(s, "second-order", {s.names[a], s.names[b], s.names[c]}, lhs, rhs);
      }
  return r;
}

// -[[l_a, Delta], l_b](c), with [f,g] = fg - (-1)^{|f||g|} gf.
inline Vec derived_operator_value(const GradedAlgebraSpec& s, const OperatorColumns& D, std::size_t a, std::size_t b, const Vec& c) {
  const int x = s.degrees[a], y = s.degrees[b];
  const Vec ea = s.basis(a), eb = s.basis(b);
  auto T = [&](const Vec& v) {
    Vec out = s.mul(ea, GradedAlgebraSpec::apply(D, v));
    detail::vaxpy(out, -s.sign(x), GradedAlgebraSpec::apply(D, s.mul(ea, v)));
    return out;
  };
  Vec out = T(s.mul(eb, c));
  detail::vaxpy(out, -s.sign((x + 1) * y), s.mul(eb, T(c)));
  return detail::vscale(out, Scalar(s.ring, -1));
}

// Right-hand side of the expansion of -(-1)^{|a|}[[l_a,Delta],l_b](c) into products and Delta.
inline Vec derived_bracket_expansion(const GradedAlgebraSpec& s, const OperatorColumns& D, std::size_t a, std::size_t b, const Vec& c) {
  const int x = s.degrees[a], y = s.degrees[b];
  const Vec ea = s.basis(a), eb = s.basis(b);
  auto Dv = [&](const Vec& v) { return GradedAlgebraSpec::apply(D, v); };
  Vec out = detail::vscale(s.mul(ea, Dv(s.mul(eb, c))), -s.sign(x));
  out = detail::vadd(out, Dv(s.mul(s.mult[a][b], c)));
  detail::vaxpy(out, s.sign(x + y), s.mul(s.mult[a][b], Dv(c)));
  detail::vaxpy(out, -s.sign(y * (x + 1)), s.mul(eb, Dv(s.mul(ea, c))));
  return out;
}

// l_{a,b} = -[[l_a, Delta], l_b] on all basis pairs and arguments, and Delta(1) = 0.
inline AxiomReport check_derived_bracket_characterization(const GradedAlgebraSpec& s, const BilinearTable& t) {
  const OperatorColumns& D = detail::require_delta(s);
  AxiomReport r{"derived-bracket", s.name, 0, {}};
  r.expect(s, "delta-unit", {s.names[s.unit]}, D[s.unit], s.zero());
  const std::size_t n = s.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        r.expect(s, "l-bracket", {s.names[a], s.names[b], s.names[c]}, s.mul(t[a][b], s.basis(c)),
                 derived_operator_value(s, D, a, b, s.basis(c)));
  return r;
}

inline AxiomReport check_derived_bracket_characterization(const GradedAlgebraSpec& s) {
  return check_derived_bracket_characterization(s, s.bracket ? *s.bracket : bv_bracket_from_delta(s));
}

struct BVEquivalence {
  std::string spec;
  bool second_order = false;
  bool gerstenhaber = false;
  bool derived = false;
  bool consistent() const { return second_order == gerstenhaber && gerstenhaber == derived; }
  nlohmann::json to_json() const {
    return {{"spec", spec}, {"second_order", second_order}, {"gerstenhaber", gerstenhaber}, {"derived_bracket", derived},
            {"consistent", consistent()}};
  }
};

// The three characterizations side by side, all with the bracket induced by Delta.
inline BVEquivalence bv_equivalence(const GradedAlgebraSpec& s) {
  const BilinearTable t = bv_bracket_from_delta(s);
  return BVEquivalence{s.name, check_second_order(s).passed(), check_gerstenhaber(s, t).passed(),
                       check_derived_bracket_characterization(s, t).passed()};
}

// ---- brackets from a square-zero derivation

inline void require_derivation(const GradedAlgebraSpec& s, const OperatorColumns& d) {
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (!s.homogeneous(d[i], s.degrees[i] + 1)) fail(ErrorCode::NotADerivation, s.name + ": operator is not of degree 1");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec rhs = s.mul(d[a], s.basis(b));
      detail::vaxpy(rhs, s.sign(s.degrees[a]), s.mul(s.basis(a), d[b]));
      if (GradedAlgebraSpec::apply(d, s.mult[a][b]) != rhs)
        fail(ErrorCode::NotADerivation, s.name + ": Leibniz rule fails at " + s.names[a] + "," + s.names[b]);
    }
  detail::require_square_zero(s, d, ErrorCode::NotSquareZero, "derivation");
}

// [a,b]_d = (-1)^{|a|+1}[da, b] with the graded commutator of the product.
inline BilinearTable derived_bracket(const GradedAlgebraSpec& s, const OperatorColumns& d) {
  require_derivation(s, d);
  const std::size_t n = s.dim();
  BilinearTable t(n, std::vector<Vec>(n, s.zero()));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int x = s.degrees[a] + 1;
      Vec v = s.mul(d[a], s.basis(b));
      detail::vaxpy(v, -s.sign(x * s.degrees[b]), s.mul(s.basis(b), d[a]));
      t[a][b] = detail::vscale(v, s.sign(x));
    }
  return t;
}

// [a,b]_d = a d(b) - (-1)^{(|a|+1)(|b|+1)} b d(a)
inline BilinearTable variant_lie_bracket(const GradedAlgebraSpec& s, const OperatorColumns& d) {
  require_derivation(s, d);
  const std::size_t n = s.dim();
  BilinearTable t(n, std::vector<Vec>(n, s.zero()));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec v = s.mul(s.basis(a), d[b]);
      detail::vaxpy(v, -s.sign((s.degrees[a] + 1) * (s.degrees[b] + 1)), s.mul(s.basis(b), d[a]));
      t[a][b] = v;
    }
  return t;
}

// d{a,b} = {da,b} + (-1)^{|a|+1}{a,db}
inline AxiomReport check_derivation_of_bracket(const GradedAlgebraSpec& s, const OperatorColumns& d, const BilinearTable& t) {
  AxiomReport r{"d-derivation-of-bracket", s.name, 0, {}};
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b) {
      Vec rhs = GradedAlgebraSpec::apply_bilinear(t, d[a], s.basis(b));
      detail::vaxpy(rhs, s.sign(s.degrees[a] + 1), GradedAlgebraSpec::apply_bilinear(t, s.basis(a), d[b]));
      r.expect(s, "derivation", {s.names[a], s.names[b]}, GradedAlgebraSpec::apply(d, t[a][b]), rhs);
    }
  return r;
}

// d = [tau, -] for tau of degree 1 with tau^2 = 0.
inline OperatorColumns interior_derivation(const GradedAlgebraSpec& s, const Vec& tau) {
  if (!s.homogeneous(tau, 1)) fail(ErrorCode::NotADerivation, s.name + ": tau must have degree 1");
  if (!detail::vis_zero(s.mul(tau, tau))) fail(ErrorCode::NotSquareZero, s.name + ": tau^2 is not zero");
  OperatorColumns d(s.dim(), s.zero());
  for (std::size_t a = 0; a < s.dim(); ++a) {
    d[a] = s.mul(tau, s.basis(a));
    detail::vaxpy(d[a], -s.sign(s.degrees[a]), s.mul(s.basis(a), tau));
  }
  return d;
}

// ---- endomorphism algebras

// Homogeneous endomorphism of a graded vector space; columns are images of basis vectors.
struct Endo {
  int degree = 0;
  OperatorColumns columns;
  friend bool operator==(const Endo&, const Endo&) = default;
};

class EndomorphismAlgebra {
 public:
  EndomorphismAlgebra(Ring ring, std::vector<int> degrees, Endo B) : ring_(ring), degrees_(std::move(degrees)), B_(std::move(B)) {
    if (B_.degree != 1 || !homogeneous(B_)) fail(ErrorCode::InvalidSpec, "B must be homogeneous of degree 1");
    if (!is_zero(compose(B_, B_))) fail(ErrorCode::BNotSquareZero, "B does not square to zero");
  }

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return degrees_.size(); }
  const std::vector<int>& degrees() const { return degrees_; }
  const Endo& B() const { return B_; }

  Endo zero(int degree) const { return Endo{degree, OperatorColumns(dim(), detail::vzero(ring_, dim()))}; }
  Endo identity() const {
    Endo e = zero(0);
    for (std::size_t i = 0; i < dim(); ++i) e.columns[i][i] = Scalar::one(ring_);
    return e;
  }
  bool is_zero(const Endo& f) const {
    for (const auto& c : f.columns)
      if (!detail::vis_zero(c)) return false;
    return true;
  }
  bool homogeneous(const Endo& f) const {
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t i = 0; i < dim(); ++i)
        if (!f.columns[j][i].is_zero() && degrees_[i] != degrees_[j] + f.degree) return false;
    return true;
  }

  Endo compose(const Endo& f, const Endo& g) const {
    Endo out{f.degree + g.degree, {}};
    for (const auto& c : g.columns) out.columns.push_back(GradedAlgebraSpec::apply(f.columns, c));
    return out;
  }
  Endo add(Endo f, const Endo& g, const Scalar& c) const {
    for (std::size_t j = 0; j < dim(); ++j) detail::vaxpy(f.columns[j], c, g.columns[j]);
    return f;
  }
  Endo scale(Endo f, const Scalar& c) const {
    for (auto& col : f.columns) col = detail::vscale(col, c);
    return f;
  }
  // [f,g] = fg - (-1)^{|f||g|} gf
  Endo commutator(const Endo& f, const Endo& g) const {
    return add(compose(f, g), compose(g, f), -sign_scalar(ring_, f.degree * g.degree));
  }
  // [f,g]_B = [[f,B],g]
  Endo derived_bracket(const Endo& f, const Endo& g) const { return commutator(commutator(f, B_), g); }

  // Leibniz-Jacobi and Poisson of the derived bracket with composition, on all triples of the family.
  AxiomReport check_loday_gerstenhaber(const std::vector<Endo>& family, const std::vector<std::string>& labels) const {
    AxiomReport r{"loday-gerstenhaber", "End", 0, {}};
    auto expect = [&](const std::string& axiom, std::vector<std::string> args, const Endo& lhs, const Endo& rhs) {
      ++r.instances;
      if (!(lhs == rhs)) r.violations.push_back(Violation{axiom, std::move(args), "", ""});
    };
    for (std::size_t a = 0; a < family.size(); ++a)
      for (std::size_t b = 0; b < family.size(); ++b)
        for (std::size_t c = 0; c < family.size(); ++c) {
          const Endo &fa = family[a], &fb = family[b], &fc = family[c];
          const std::vector<std::string> args{labels[a], labels[b], labels[c]};
          const int s_ab = (fa.degree + 1) * (fb.degree + 1);
          expect("jacobi", args, derived_bracket(fa, derived_bracket(fb, fc)),
                 add(derived_bracket(derived_bracket(fa, fb), fc), derived_bracket(fb, derived_bracket(fa, fc)), sign_scalar(ring_, s_ab)));
          expect("poisson", args, derived_bracket(fa, compose(fb, fc)),
                 add(compose(derived_bracket(fa, fb), fc), compose(fb, derived_bracket(fa, fc)),
                     sign_scalar(ring_, (fa.degree + 1) * fb.degree)));
        }
    return r;
  }

  // End(E) itself as a graded algebra spec on the elementary matrices, with the derived bracket table.
  std::pair<GradedAlgebraSpec, BilinearTable> as_spec() const {
    const std::size_t n = dim(), N = n * n;
    GradedAlgebraSpec s;
    s.name = "End";
    s.ring = ring_;
    std::vector<Endo> elems;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Endo e = zero(degrees_[i] - degrees_[j]);
        e.columns[j][i] = Scalar::one(ring_);
        elems.push_back(e);
        s.names.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
        s.degrees.push_back(e.degree);
      }
    auto coords = [&](const Endo& f) {
      Vec v = detail::vzero(ring_, N);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v[i * n + j] = f.columns[j][i];
      return v;
    };
    s.mult.assign(N, std::vector<Vec>(N));
    BilinearTable t(N, std::vector<Vec>(N));
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        s.mult[a][b] = coords(compose(elems[a], elems[b]));
        t[a][b] = coords(derived_bracket(elems[a], elems[b]));
      }
    // the unit is the identity, which is not a basis vector; specs here only use mult and the bracket
    s.unit = 0;
    return {s, t};
  }

 private:
  Ring ring_;
  std::vector<int> degrees_;
  Endo B_;
};

inline Endo left_multiplication(const GradedAlgebraSpec& s, std::size_t a) {
  Endo e{s.degrees[a], {}};
  for (std::size_t c = 0; c < s.dim(); ++c) e.columns.push_back(s.mult[a][c]);
  return e;
}

// a -> l_a into End(A) with B = -Delta: injective, multiplicative, l_{a,b} = [l_a, l_b]_{-Delta}.
inline AxiomReport check_left_multiplication_embedding(const GradedAlgebraSpec& s, const BilinearTable& t) {
  const OperatorColumns& D = detail::require_delta(s);
  Endo minus_delta{1, {}};
  for (const auto& c : D) minus_delta.columns.push_back(detail::vscale(c, Scalar(s.ring, -1)));
  const EndomorphismAlgebra E(s.ring, s.degrees, minus_delta);
  AxiomReport r{"left-multiplication-embedding", s.name, 0, {}};
  std::vector<Endo> l;
  for (std::size_t a = 0; a < s.dim(); ++a) l.push_back(left_multiplication(s, a));
  auto endo_of = [&](const Vec& v, int degree) {
    Endo out = E.zero(degree);
    for (std::size_t i = 0; i < s.dim(); ++i) out = E.add(out, l[i], v[i]);
    return out;
  };
  auto flat = [&](const Endo& f) {
    Vec v;
    for (const auto& c : f.columns) v.insert(v.end(), c.begin(), c.end());
    return v;
  };
  for (std::size_t a = 0; a < s.dim(); ++a) {
    // injectivity: l_a(1) = a
    r.expect(s, "injective", {s.names[a]}, GradedAlgebraSpec::apply(l[a].columns, s.basis(s.unit)), s.basis(a));
    for (std::size_t b = 0; b < s.dim(); ++b) {
      const int d = s.degrees[a] + s.degrees[b];
      ++r.instances;
      if (!(flat(endo_of(s.mult[a][b], d)) == flat(E.compose(l[a], l[b]))))
        r.violations.push_back(Violation{"multiplicative", {s.names[a], s.names[b]}, "", ""});
      ++r.instances;
      if (!(flat(endo_of(t[a][b], d + 1)) == flat(E.derived_bracket(l[a], l[b]))))
        r.violations.push_back(Violation{"bracket", {s.names[a], s.names[b]}, s.format(t[a][b]), ""});
    }
  }
  return r;
}

// ---- Poisson failure search for the variant bracket

struct PoissonWitness {
  GradedAlgebraSpec spec;
  OperatorColumns d;
  std::vector<std::string> triple;
};

// Exhaustive search over 3-dimensional graded algebras {1, x, y} over F_2 with degrees in
// [-1, 1], a degree +1 square-zero derivation d, and the variant bracket violating Poisson.
// Enumeration order is fixed, so the first witness is reproducible.
inline std::optional<PoissonWitness> search_variant_poisson_failure() {
  const Ring F2 = Ring::prime_field(2);
  for (int dx = -1; dx <= 1; ++dx)
    for (int dy = -1; dy <= 1; ++dy)
      for (unsigned prod = 0; prod < (1u << 8); ++prod)
        for (unsigned dbits = 0; dbits < (1u << 9); ++dbits) {
          GradedAlgebraSpec s;
          s.name = "variant-poisson-witness";
          s.ring = F2;
          s.names = {"1", "x", "y"};
          s.degrees = {0, dx, dy};
          s.unit = 0;
          s.mult.assign(3, std::vector<Vec>(3, s.zero()));
          for (std::size_t i = 0; i < 3; ++i) s.mult[0][i] = s.mult[i][0] = s.basis(i);
          // products of x, y: 2 bits each for the x, y coordinates of xx, xy, yx, yy
          unsigned bit = 0;
          for (std::size_t i = 1; i < 3; ++i)
            for (std::size_t j = 1; j < 3; ++j)
              for (std::size_t k = 1; k < 3; ++k, ++bit)
                if (prod >> bit & 1u) s.mult[i][j][k] = Scalar::one(F2);
          OperatorColumns d(3, s.zero());
          bit = 0;
          for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t i = 0; i < 3; ++i, ++bit)
              if (dbits >> bit & 1u) d[j][i] = Scalar::one(F2);
          try {
            s.validate();
            const BilinearTable t = variant_lie_bracket(s, d);
            const AxiomReport r = check_poisson_only(s, t);
            if (!r.passed()) return PoissonWitness{s, d, r.violations.front().args};
          } catch (const Error&) {
          }
        }
  return std::nullopt;
}

}  // namespace hochbv
