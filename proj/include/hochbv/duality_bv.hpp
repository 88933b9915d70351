#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "hochbv/bv_axioms.hpp"
#include "hochbv/group_comparison.hpp"
#include "hochbv/resolutions.hpp"
#include "hochbv/structure_ops.hpp"

namespace hochbv {

// Class in the Koszul small model of k[Z^d]: coordinates over A on the generators of degree `degree`.
// The small-model differentials vanish, so coordinates are classes.
struct SmallClass {
  int degree = 0;
  std::vector<GroupAlgebraElement> coords;

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const GroupAlgebraElement& x) { return x.is_zero(); });
  }
  friend bool operator==(const SmallClass& a, const SmallClass& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree == b.degree && a.coords == b.coords;
  }
};

using AMatrix = std::vector<std::vector<GroupAlgebraElement>>;

struct CheckResult {
  std::string name;
  bool ok = true;
  nlohmann::json witness;

  nlohmann::json to_json() const {
    nlohmann::json j{{"name", name}, {"status", ok ? "PASS" : "FAIL"}};
    if (!witness.is_null()) j["witness"] = witness;
    return j;
  }
};

namespace detail {

inline bool is_unit(const GroupAlgebraElement& x) {
  if (x.terms().size() != 1) return false;
  const Scalar c = x.terms().begin()->second;
  return x.ring().is_field() || c.is_one() || (-c).is_one();
}

inline GroupAlgebraElement unit_inverse(const GroupAlgebraElement& x) {
  const auto& [g, c] = *x.terms().begin();
  return GroupAlgebraElement::basis(x.group(), x.ring(), x.group()->inverse(g)).scaled(Scalar::one(x.ring()) / c);
}

inline GroupAlgebraElement determinant(const AMatrix& m, const GroupPtr& G, const Ring& ring) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  GroupAlgebraElement det(G, ring);
  do {
    GroupAlgebraElement term = GroupAlgebraElement::unit(G, ring);
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      term = term * m[i][perm[i]];
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[j] < perm[i]) ++inversions;
    }
    det += term.scaled(sign_scalar(ring, inversions));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Gauss-Jordan over A with unit pivots.
inline AMatrix invert_over_A(AMatrix m, const GroupPtr& G, const Ring& ring) {
  const std::size_t n = m.size();
  AMatrix inv(n, std::vector<GroupAlgebraElement>(n, GroupAlgebraElement(G, ring)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = GroupAlgebraElement::unit(G, ring);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && !is_unit(m[piv][col])) ++piv;
    if (piv == n) fail(ErrorCode::NotInvertible, "no unit pivot in column " + std::to_string(col));
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const GroupAlgebraElement u = unit_inverse(m[col][col]);
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] = u * m[col][j];
      inv[col][j] = u * inv[col][j];
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const GroupAlgebraElement f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline nlohmann::json matrix_json(const AMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    rows.push_back(r);
  }
  return rows;
}

}  // namespace detail

// Van den Bergh duality and the BV operator on HH^*(k[Z^d], k[Z^d]) through the Koszul small model.
class ZdDuality {
 public:
  ZdDuality(int d, Ring ring, SectionSide side = SectionSide::Right, bool allow_slow = false, int connes_sign = 1)
      : d_(d), ring_(ring), connes_sign_(connes_sign), cmp_(make_comparison(d, ring, side, allow_slow)),
        G_(cmp_.group()), A_(Bimodule::regular(G_)), cache_(std::make_shared<Cache>()) {
    // [M] = sum over permutations of sign [t_{pi 1}|..|t_{pi d}], c = sigma([M])
    fundamental_ = BarElement(ring_);
    std::vector<int> perm(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
      int inversions = 0;
      Word w;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        w.push_back(G_->generator(perm[i]));
        for (std::size_t j = i + 1; j < perm.size(); ++j)
          if (perm[j] < perm[i]) ++inversions;
      }
      fundamental_.add(w, sign_scalar(ring_, inversions));
    } while (std::next_permutation(perm.begin(), perm.end()));
    c_ = sigma(fundamental_, G_);
    for (int p = 0; p <= d_; ++p) {
      AMatrix m(rank(d_ - p), std::vector<GroupAlgebraElement>(rank(p), GroupAlgebraElement(G_, ring_)));
      for (std::size_t i = 0; i < rank(p); ++i) {
        const SmallClass col = act(monomial(p, i, G_->identity()));
        for (std::size_t r = 0; r < rank(d_ - p); ++r) m[r][i] = col.coords[r];
      }
      duality_.push_back(m);
      determinants_.push_back(detail::determinant(m, G_, ring_));
      inverses_.push_back(detail::invert_over_A(m, G_, ring_));
    }
    cup_table_.resize(static_cast<std::size_t>(d_ + 1));
    for (int p = 0; p <= d_; ++p)
      for (int q = 0; p + q <= d_; ++q)
        for (std::size_t i = 0; i < rank(p); ++i)
          for (std::size_t j = 0; j < rank(q); ++j)
            cup_table_[static_cast<std::size_t>(p)][{q, i, j}] =
                cup_chain_level(monomial(p, i, G_->identity()), monomial(q, j, G_->identity()));
  }

  int rank_of_group() const { return d_; }
  const Ring& ring() const { return ring_; }
  const GroupPtr& group() const { return G_; }
  const BimodulePtr& algebra() const { return A_; }
  const Comparison<KoszulResolution>& comparison() const { return cmp_; }
  std::size_t rank(int n) const { return cmp_.resolution().rank(n); }
  const BarElement& fundamental_cycle() const { return fundamental_; }
  const HochschildChain& fundamental_class() const { return c_; }
  const AMatrix& duality_matrix(int p) const { return duality_.at(static_cast<std::size_t>(p)); }
  const AMatrix& inverse_duality_matrix(int p) const { return inverses_.at(static_cast<std::size_t>(p)); }
  const GroupAlgebraElement& determinant(int p) const { return determinants_.at(static_cast<std::size_t>(p)); }

  SmallClass zero(int n) const { return SmallClass{n, std::vector<GroupAlgebraElement>(rank(n), GroupAlgebraElement(G_, ring_))}; }
  SmallClass monomial(int n, std::size_t i, const GroupElement& g, const Scalar& c) const {
    SmallClass out = zero(n);
    out.coords.at(i) = GroupAlgebraElement::basis(G_, ring_, g).scaled(c);
    return out;
  }
  SmallClass monomial(int n, std::size_t i, const GroupElement& g) const { return monomial(n, i, g, Scalar::one(ring_)); }

  SmallClass add(SmallClass a, const SmallClass& b) const {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    if (a.degree != b.degree) fail(ErrorCode::InvalidSpec, "adding classes of different degrees");
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  SmallClass scale(SmallClass a, const Scalar& c) const {
    for (auto& x : a.coords) x = x.scaled(c);
    return a;
  }
  SmallClass sub(const SmallClass& a, const SmallClass& b) const { return add(a, scale(b, Scalar(ring_, -1))); }

  std::string format(const SmallClass& a) const {
    std::string out;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      for (const auto& [g, c] : a.coords[i].terms()) {
        if (!out.empty()) out += " + ";
        const std::string mono = G_->format(g);
        out += (c.is_one() ? "" : c.to_string() + "*") + (mono == "1" ? "" : mono + "*") + cmp_.resolution().generator_name(a.degree, i);
      }
    return out.empty() ? "0" : out;
  }

  // Cochain class a -> bar cochain a o psi.
  HochschildCochain transport(const SmallClass& a) const {
    SmallCochain f{a.degree, A_, {}};
    for (const auto& x : a.coords) {
      ModuleVector v(ring_);
      for (const auto& [g, c] : x.terms()) v.add(key_of(g), c);
      f.values.push_back(v);
    }
    return cmp_.transport_cochain(f);
  }

  // Bar cocycle F -> F o phi.
  SmallClass restrict(const HochschildCochain& F) const {
    SmallClass out = zero(F.arity());
    if (F.arity() < 0 || F.arity() > d_) return out;
    const SmallCochain f = cmp_.restrict_cochain(F);
    for (std::size_t i = 0; i < f.values.size(); ++i)
      for (const auto& [m, c] : f.values[i]) out.coords[i] += GroupAlgebraElement::basis(G_, ring_, element_of(m)).scaled(c);
    return out;
  }

  SmallClass chain_class(const HochschildChain& z, int n) const {
    SmallClass out = zero(n);
    if (n < 0 || n > d_) return out;
    for (const auto& [k, c] : cmp_.to_small(z)) out.coords.at(k.gen) += GroupAlgebraElement::basis(G_, ring_, element_of(k.m)).scaled(c);
    return out;
  }

  // a . c in the small model of HH_{d-p}.
  SmallClass act(const SmallClass& a) const { return chain_class(left_action(transport(a), c_), d_ - a.degree); }

  // D: HH_{d-p} -> HH^p, the inverse of a -> a . c.
  SmallClass dual(const SmallClass& z) const {
    const int p = d_ - z.degree;
    SmallClass out = zero(p);
    if (p < 0 || p > d_) return out;
    const AMatrix& inv = inverse_duality_matrix(p);
    for (std::size_t r = 0; r < out.coords.size(); ++r)
      for (std::size_t j = 0; j < z.coords.size(); ++j) out.coords[r] += inv[r][j] * z.coords[j];
    return out;
  }

  // Delta(a) = -D(B(a . c)).
  SmallClass delta(const SmallClass& a) const {
    SmallClass out = zero(a.degree - 1);
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      for (const auto& [g, c] : a.coords[i].terms()) out = add(out, scale(delta_monomial(a.degree, i, g), c));
    return out;
  }

  SmallClass cup(const SmallClass& a, const SmallClass& b) const {
    const int p = a.degree, q = b.degree;
    SmallClass out = zero(p + q);
    if (p < 0 || q < 0 || p + q > d_) return out;
    const auto& table = cup_table_[static_cast<std::size_t>(p)];
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      for (std::size_t j = 0; j < b.coords.size(); ++j) {
        if (a.coords[i].is_zero() || b.coords[j].is_zero()) continue;
        const GroupAlgebraElement ab = a.coords[i] * b.coords[j];
        const SmallClass& e = table.at({q, i, j});
        for (std::size_t r = 0; r < out.coords.size(); ++r) out.coords[r] += ab * e.coords[r];
      }
    return out;
  }

  SmallClass cup_chain_level(const SmallClass& a, const SmallClass& b) const { return restrict(hochbv::cup(transport(a), transport(b))); }
  SmallClass bracket_chain_level(const SmallClass& a, const SmallClass& b) const {
    return restrict(gerstenhaber_bracket(transport(a), transport(b)));
  }

  // {a,b} = (-1)^{|a|}(Delta(ab) - (Delta a)b - (-1)^{|a|} a Delta(b)), |a| = -p.
  SmallClass bv_bracket(const SmallClass& a, const SmallClass& b) const {
    const Scalar s = sign_scalar(ring_, a.degree);
    SmallClass v = sub(delta(cup(a, b)), cup(delta(a), b));
    v = sub(v, scale(cup(a, delta(b)), s));
    return scale(v, s);
  }

  // t^k x_S for |k_i| <= K, generators in order, exponents lexicographic.
  std::vector<SmallClass> truncated_basis(int p, int K) const {
    std::vector<SmallClass> out;
    std::vector<std::vector<std::int64_t>> exps{{}};
    for (int v = 0; v < d_; ++v) {
      std::vector<std::vector<std::int64_t>> next;
      for (const auto& e : exps)
        for (std::int64_t k = -K; k <= K; ++k) {
          auto f = e;
          f.push_back(k);
          next.push_back(f);
        }
      exps = next;
    }
    for (std::size_t i = 0; i < rank(p); ++i)
      for (const auto& e : exps) out.push_back(monomial(p, i, G_->monomial(e)));
    return out;
  }
  std::vector<SmallClass> truncated_basis(int K) const {
    std::vector<SmallClass> out;
    for (int p = 0; p <= d_; ++p) {
      auto b = truncated_basis(p, K);
      out.insert(out.end(), b.begin(), b.end());
    }
    return out;
  }

 private:
  static Comparison<KoszulResolution> make_comparison(int d, Ring ring, SectionSide side, bool allow_slow) {
    if (d < 1) fail(ErrorCode::UnsupportedRank, "rank must be at least 1");
    if (d > 2 && !allow_slow) fail(ErrorCode::UnsupportedRank, "rank " + std::to_string(d) + " needs --allow-slow");
    return Comparison<KoszulResolution>(KoszulResolution(d, ring, side));
  }

  SmallClass delta_monomial(int p, std::size_t i, const GroupElement& g) const {
    const auto key = std::tuple{p, i, g};
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->delta.find(key);
      if (it != cache_->delta.end()) return it->second;
    }
    SmallClass out = zero(p - 1);
    if (p >= 1) {
      const HochschildChain ac = left_action(transport(monomial(p, i, g)), c_);
      out = scale(dual(chain_class(connes_B(ac, connes_sign_), d_ - p + 1)), Scalar(ring_, -1));
    }
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->delta.emplace(key, out);
    return out;
  }

  struct Cache {
    std::mutex mutex;
    std::map<std::tuple<int, std::size_t, GroupElement>, SmallClass> delta;
  };

  int d_;
  Ring ring_;
  int connes_sign_;
  Comparison<KoszulResolution> cmp_;
  GroupPtr G_;
  BimodulePtr A_;
  BarElement fundamental_;
  HochschildChain c_{nullptr, Ring::rationals()};
  std::vector<AMatrix> duality_, inverses_;
  std::vector<GroupAlgebraElement> determinants_;
  std::vector<std::map<std::tuple<int, std::size_t, std::size_t>, SmallClass>> cup_table_;
  std::shared_ptr<Cache> cache_;
};

// ---- checks

struct DualityReport {
  std::string group;
  int d = 0;
  int K = 0;
  std::vector<CheckResult> checks;
  nlohmann::json delta_tables = nlohmann::json::object();
  nlohmann::json duality_matrices = nlohmann::json::array();

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
  }
  const CheckResult& check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    fail(ErrorCode::InvalidSpec, "no check named " + name);
  }
  nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) cs.push_back(c.to_json());
    return {{"group", group}, {"d", d}, {"K", K}, {"checks", cs}, {"duality_matrices", duality_matrices}, {"delta_tables", delta_tables}};
  }
};

namespace detail {

class CheckRecorder {
 public:
  CheckRecorder(const ZdDuality& Z, std::string name) : Z_(Z), result_{std::move(name), true, nullptr} {}
  void expect(const std::vector<const SmallClass*>& args, const SmallClass& lhs, const SmallClass& rhs) {
    ++instances_;
    if (lhs == rhs || !result_.ok) {
      if (!(lhs == rhs)) ++failures_;
      return;
    }
    ++failures_;
    result_.ok = false;
    nlohmann::json a = nlohmann::json::array();
    for (const auto* x : args) a.push_back(Z_.format(*x));
    result_.witness = {{"args", a}, {"lhs", Z_.format(lhs)}, {"rhs", Z_.format(rhs)}};
  }
  CheckResult finish() {
    if (result_.ok)
      result_.witness = {{"instances", instances_}};
    else
      result_.witness["failures"] = failures_;
    return result_;
  }

 private:
  const ZdDuality& Z_;
  CheckResult result_;
  std::size_t instances_ = 0, failures_ = 0;
};

}  // namespace detail

// Gerstenhaber axioms for the BV bracket on triples from `basis`, with classes of lower degree -p.
inline CheckResult check_gerstenhaber_on_window(const ZdDuality& Z, const std::vector<SmallClass>& basis) {
  detail::CheckRecorder rec(Z, "gerstenhaber-axioms");
  const Ring& ring = Z.ring();
  auto sg = [&](int e) { return sign_scalar(ring, e); };
  for (const auto& a : basis)
    for (const auto& b : basis) {
      const int x = -a.degree, y = -b.degree;
      rec.expect({&a, &b}, Z.cup(a, b), Z.scale(Z.cup(b, a), sg(x * y)));
      rec.expect({&a, &b}, Z.bv_bracket(a, b), Z.scale(Z.bv_bracket(b, a), -sg((x + 1) * (y + 1))));
    }
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        const int x = -a.degree, y = -b.degree;
        const SmallClass jl = Z.bv_bracket(a, Z.bv_bracket(b, c));
        SmallClass jr = Z.bv_bracket(Z.bv_bracket(a, b), c);
        jr = Z.add(jr, Z.scale(Z.bv_bracket(b, Z.bv_bracket(a, c)), sg((x + 1) * (y + 1))));
        rec.expect({&a, &b, &c}, jl, jr);
        const SmallClass pl = Z.bv_bracket(a, Z.cup(b, c));
        SmallClass pr = Z.cup(Z.bv_bracket(a, b), c);
        pr = Z.add(pr, Z.scale(Z.cup(b, Z.bv_bracket(a, c)), sg((x + 1) * y)));
        rec.expect({&a, &b, &c}, pl, pr);
      }
  return rec.finish();
}

// {a,b} c = -[[l_a, Delta], l_b](c).
inline CheckResult check_derived_on_window(const ZdDuality& Z, const std::vector<SmallClass>& basis) {
  detail::CheckRecorder rec(Z, "derived-bracket");
  const Ring& ring = Z.ring();
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        const int x = -a.degree, y = -b.degree;
        auto T = [&](const SmallClass& v) { return Z.sub(Z.cup(a, Z.delta(v)), Z.scale(Z.delta(Z.cup(a, v)), sign_scalar(ring, x))); };
        SmallClass rhs = Z.sub(T(Z.cup(b, c)), Z.scale(Z.cup(b, T(c)), sign_scalar(ring, (x + 1) * y)));
        rec.expect({&a, &b, &c}, Z.cup(Z.bv_bracket(a, b), c), Z.scale(rhs, Scalar(ring, -1)));
      }
  return rec.finish();
}

struct BVCheckOptions {
  int K = 3;
  // exponent bound for the triple checks (axioms, derived bracket, module morphism)
  int triple_K = 1;
  bool compare_psi_variants = true;
};

inline BVCheckOptions default_bv_options(int d, int K) {
  BVCheckOptions o;
  o.K = K;
  o.triple_K = d == 1 ? K : std::min(K, 1);
  return o;
}

inline nlohmann::json delta_table(const ZdDuality& Z, int K) {
  nlohmann::json t = nlohmann::json::object();
  for (const auto& a : Z.truncated_basis(K)) t[Z.format(a)] = Z.format(Z.delta(a));
  return t;
}

// Duality, Delta and bracket checks for k[Z^d] on the window |k_i| <= K.
inline DualityReport check_bv_on_hh(const ZdDuality& Z, const BVCheckOptions& opt = {}) {
  DualityReport rep;
  rep.group = Z.group()->name();
  rep.d = Z.rank_of_group();
  rep.K = opt.K;
  const int d = rep.d;
  const Ring& ring = Z.ring();
  const BimodulePtr k = Bimodule::trivial(Z.group());

  {
    HochschildChain M(k, ring);
    for (const auto& [w, c] : Z.fundamental_cycle()) M.add(BarWord{k->unit(), w}, c);
    const bool ok = normalized_differential(M).is_zero() && normalized_differential(Z.fundamental_class()).is_zero();
    rep.checks.push_back({"fundamental-cycle", ok, {{"c", Z.fundamental_class().to_string()}}});
  }
  {
    const SmallClass top = Z.chain_class(Z.fundamental_class(), d);
    const bool ok = top.coords.size() == 1 && detail::is_unit(top.coords[0]);
    rep.checks.push_back({"fundamental-normalization", ok, {{"coordinate", Z.format(top)}}});
  }
  {
    const HochschildChain Bc = connes_B(Z.fundamental_class());
    const bool ok = normalized_differential(Bc).is_zero() && Z.chain_class(Bc, d + 1).is_zero();
    rep.checks.push_back({"connes-B-of-c", ok, {{"terms", Bc.terms().size()}}});
  }
  for (int p = 0; p <= d; ++p) {
    const GroupAlgebraElement& det = Z.determinant(p);
    rep.duality_matrices.push_back({{"p", p}, {"matrix", detail::matrix_json(Z.duality_matrix(p))}, {"determinant", det.to_string()}});
    rep.checks.push_back({"duality-invertible-" + std::to_string(p), detail::is_unit(det), {{"determinant", det.to_string()}}});
  }
  const auto window = Z.truncated_basis(opt.K);
  const auto small = Z.truncated_basis(std::min(opt.K, opt.triple_K));
  {
    detail::CheckRecorder rec(Z, "duality-module-morphism");
    for (const auto& a : small)
      for (const auto& b : small) {
        if (a.degree + b.degree > d) continue;
        const HochschildChain bc = left_action(Z.transport(b), Z.fundamental_class());
        rec.expect({&a, &b}, Z.act(Z.cup_chain_level(a, b)), Z.chain_class(left_action(Z.transport(a), bc), d - a.degree - b.degree));
      }
    rep.checks.push_back(rec.finish());
  }
  {
    detail::CheckRecorder rec(Z, "duality-roundtrip");
    for (const auto& a : window) rec.expect({&a}, Z.dual(Z.act(a)), a);
    rep.checks.push_back(rec.finish());
  }
  {
    detail::CheckRecorder rec(Z, "delta-unit");
    const SmallClass one = Z.monomial(0, 0, Z.group()->identity());
    rec.expect({&one}, Z.delta(one), Z.zero(-1));
    rep.checks.push_back(rec.finish());
  }
  {
    detail::CheckRecorder rec(Z, "delta-square-zero");
    for (const auto& a : window) rec.expect({&a}, Z.delta(Z.delta(a)), Z.zero(a.degree - 2));
    rep.checks.push_back(rec.finish());
  }
  {
    detail::CheckRecorder rec(Z, "cup-chain-level");
    for (const auto& a : window)
      for (const auto& b : window) rec.expect({&a, &b}, Z.cup(a, b), Z.cup_chain_level(a, b));
    rep.checks.push_back(rec.finish());
  }
  {
    detail::CheckRecorder rec(Z, "bv-bracket-equals-gerstenhaber");
    for (const auto& a : window)
      for (const auto& b : window) rec.expect({&a, &b}, Z.bv_bracket(a, b), Z.bracket_chain_level(a, b));
    rep.checks.push_back(rec.finish());
  }
  rep.checks.push_back(check_gerstenhaber_on_window(Z, small));
  rep.checks.push_back(check_derived_on_window(Z, small));
  rep.delta_tables = delta_table(Z, opt.K);
  if (opt.compare_psi_variants) {
    const SectionSide other =
        Z.comparison().resolution().side() == SectionSide::Right ? SectionSide::Left : SectionSide::Right;
    const ZdDuality W(d, ring, other, true);
    bool ok = delta_table(W, opt.K) == rep.delta_tables;
    nlohmann::json mats = nlohmann::json::array();
    for (int p = 0; p <= d; ++p) {
      ok = ok && W.duality_matrix(p) == Z.duality_matrix(p);
      mats.push_back(detail::matrix_json(W.duality_matrix(p)));
    }
    for (const auto& a : small)
      for (const auto& b : small) ok = ok && W.cup(a, b) == Z.cup(a, b) && W.bv_bracket(a, b) == Z.bv_bracket(a, b);
    rep.checks.push_back({"psi-independence", ok, ok ? nlohmann::json(nullptr) : nlohmann::json{{"other_matrices", mats}}});
  }
  return rep;
}

// Calabi-Yau conditions for k[Z] from the Koszul model with coefficients in A (x) A (outer structure):
// HH^0(A, A(x)A) = 0 and HH^1(A, A(x)A) = A via x (x) y -> yx, on the window of exponents |i|, |j| <= W.
inline DualityReport calabi_yau_check(int d, Ring ring, int W = 5) {
  if (d != 1) fail(ErrorCode::UnsupportedRank, "Calabi-Yau verification is implemented for rank 1 only");
  if (!ring.is_field()) fail(ErrorCode::InvalidSpec, "Calabi-Yau verification needs a field");
  const KoszulResolution P(1, ring);
  const GroupPtr G = P.group();
  const BimodulePtr N = Bimodule::outer(G);
  const SmallComplex cx = hochschild_via_resolution(P, N, false);
  DualityReport rep;
  rep.group = G->name();
  rep.d = d;
  rep.K = W;
  rep.checks.push_back({"finite-resolution", P.length() == 1 && P.rank(0) == 1 && P.rank(1) == 1, {{"ranks", {P.rank(0), P.rank(1)}}}});

  auto tensor = [&](std::int64_t i, std::int64_t j) { return Bimodule::join(G->monomial({i}), G->monomial({j})); };
  const EnvelopingElement& D0 = cx.differentials.at(0).entries.at({0, 0});
  auto delta0 = [&](const ModuleKey& m) {
    ModuleVector v(ring);
    for (const auto& [lr, c] : D0.terms()) v.add(N->right(N->left(lr.first, m), lr.second), c);
    return v;
  };
  std::vector<ModuleKey> window;
  for (std::int64_t i = -W; i <= W; ++i)
    for (std::int64_t j = -W; j <= W; ++j) window.push_back(tensor(i, j));
  std::map<ModuleKey, std::size_t> index;
  auto idx = [&](const ModuleKey& m) { return index.try_emplace(m, index.size()).first->second; };
  auto to_sparse = [&](const ModuleVector& v) {
    SparseVector s(ring);
    for (const auto& [m, c] : v) s.add(idx(m), c);
    return s;
  };
  FieldEchelon image(ring);
  for (const auto& m : window) image.insert(to_sparse(delta0(m)));
  const std::size_t rank = image.rank();
  rep.checks.push_back({"HH0-vanishes", rank == window.size(), {{"window", window.size()}, {"rank", rank}}});

  // kernel of x (x) y -> yx on the window is spanned by t^i (x) t^j - t^{i+1} (x) t^{j-1}
  bool exact = true;
  nlohmann::json witness = nullptr;
  for (std::int64_t i = -W; i < W && exact; ++i)
    for (std::int64_t j = -W + 1; j <= W && exact; ++j) {
      ModuleVector v(ring);
      v.add(tensor(i, j), Scalar::one(ring));
      v.add(tensor(i + 1, j - 1), Scalar(ring, -1));
      if (!image.in_span(to_sparse(v))) {
        exact = false;
        witness = {{"i", i}, {"j", j}};
      }
    }
  rep.checks.push_back({"HH1-kernel-of-substitution", exact, witness});

  const BimodulePtr A = Bimodule::regular(G);
  auto mu = [&](const ModuleVector& v) {
    ModuleVector out(ring);
    for (const auto& [m, c] : v) {
      const auto [x, y] = N->split(m);
      out.add(key_of(G->multiply(y, x)), c);
    }
    return out;
  };
  bool kills = true;
  for (const auto& m : window) kills = kills && mu(delta0(m)).is_zero();
  rep.checks.push_back({"substitution-kills-image", kills, nullptr});

  // inner structure a.(x (x) y).b = xb (x) ay
  auto inner = [&](const GroupElement& a, const ModuleKey& m, const GroupElement& b) {
    const auto [x, y] = N->split(m);
    return Bimodule::join(G->multiply(x, b), G->multiply(a, y));
  };
  bool actions = true;
  nlohmann::json action_witness = nullptr;
  const std::vector<GroupElement> gens{G->identity(), G->generator(), G->inverse(G->generator())};
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& m : window) {
        const ModuleVector lhs = mu(ModuleVector(ring, inner(a, m, b)));
        const ModuleVector rhs(ring, A->right(A->left(a, mu(ModuleVector(ring, m)).begin()->first), b));
        ModuleVector shifted(ring);
        for (const auto& [k2, c] : delta0(m)) shifted.add(inner(a, k2, b), c);
        ModuleVector expected(ring);
        for (const auto& [k2, c] : delta0(inner(a, m, b))) expected.add(k2, c);
        if (!(lhs == rhs) || !(shifted == expected)) {
          actions = false;
          if (action_witness.is_null()) action_witness = {{"a", G->format(a)}, {"b", G->format(b)}, {"m", N->format(m)}};
        }
      }
  rep.checks.push_back({"bimodule-actions", actions, action_witness});
  const ModuleVector one = mu(ModuleVector(ring, tensor(0, 0)));
  rep.checks.push_back({"unit-to-unit", one == ModuleVector(ring, A->unit()), {{"image", A->format(one.begin()->first)}}});
  return rep;
}

}  // namespace hochbv
