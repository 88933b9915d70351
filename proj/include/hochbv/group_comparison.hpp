#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hochbv/finite_classes.hpp"
#include "hochbv/structure_ops.hpp"

namespace hochbv {

inline GroupElement word_product(const Group& G, const Word& w, std::size_t from = 0, std::size_t to = SIZE_MAX) {
  GroupElement out = G.identity();
  to = std::min(to, w.size());
  for (std::size_t i = from; i < to; ++i) out = G.multiply(out, w[i]);
  return out;
}

// Element of B(M~; k[G]; k): m[g_1|..|g_n] with m in the conjugation module of M.
class GroupChain {
 public:
  using Terms = LinearCombination<BarWord>;

  GroupChain(BimodulePtr module, Ring ring) : module_(std::move(module)), terms_(ring) {}
  GroupChain(BimodulePtr module, Terms terms) : module_(std::move(module)), terms_(std::move(terms)) {}

  static GroupChain basis(BimodulePtr module, Ring ring, ModuleKey m, Word letters) {
    GroupChain c(std::move(module), ring);
    c.add(BarWord{std::move(m), std::move(letters)}, Scalar::one(ring));
    return c;
  }

  const BimodulePtr& module() const { return module_; }
  const Ring& ring() const { return terms_.ring(); }
  const Terms& terms() const { return terms_; }
  const GroupPtr& group() const { return module_->group(); }
  bool is_zero() const { return terms_.is_zero(); }

  void add(const BarWord& w, const Scalar& c) { terms_.add(w, c); }
  GroupChain& operator+=(const GroupChain& o) {
    terms_ += o.terms_;
    return *this;
  }
  GroupChain& operator-=(const GroupChain& o) {
    terms_ -= o.terms_;
    return *this;
  }
  friend GroupChain operator-(GroupChain a, const GroupChain& b) { return a -= b; }
  friend bool operator==(const GroupChain& a, const GroupChain& b) {
    return *a.module_ == *b.module_ && a.terms_ == b.terms_;
  }

  // Same terms read as a Hochschild chain, for indexing in finite complexes.
  HochschildChain as_hochschild_terms() const { return HochschildChain(module_, terms_); }

 private:
  BimodulePtr module_;
  Terms terms_;
};

// d(m[g_1|..|g_n]) = m.g_1[g_2|..] + sum (-1)^i m[..|g_i g_{i+1}|..] + (-1)^n m[g_1|..|g_{n-1}], normalized.
inline GroupChain group_chain_differential(const GroupChain& c) {
  const Bimodule& M = *c.module();
  const Group& G = *c.group();
  const Ring ring = c.ring();
  GroupChain out(c.module(), ring);
  for (const auto& [w, coef] : c.terms()) {
    const std::size_t n = w.letters.size();
    if (n == 0) continue;
    auto emit = [&](ModuleKey m, Word letters, int sign) {
      if (has_unit_letter(G, letters)) return;
      out.add(BarWord{std::move(m), std::move(letters)}, sign_scalar(ring, sign) * coef);
    };
    emit(M.conj_right(w.m, w.letters[0]), Word(w.letters.begin() + 1, w.letters.end()), 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Word merged(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(i));
      merged.push_back(G.multiply(w.letters[i], w.letters[i + 1]));
      merged.insert(merged.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(i + 2), w.letters.end());
      emit(w.m, std::move(merged), static_cast<int>(i + 1));
    }
    emit(w.m, Word(w.letters.begin(), w.letters.end() - 1), static_cast<int>(n));
  }
  return out;
}

// Normalized cochain G^p -> N~.
class GroupCochain {
 public:
  using Evaluator = std::function<ModuleVector(const Word&)>;

  GroupCochain(int arity, BimodulePtr target, Ring ring, Evaluator eval)
      : arity_(arity), target_(std::move(target)), ring_(std::move(ring)), eval_(std::move(eval)) {}

  int arity() const { return arity_; }
  const BimodulePtr& target() const { return target_; }
  const Ring& ring() const { return ring_; }
  const GroupPtr& group() const { return target_->group(); }

  ModuleVector operator()(const Word& w) const {
    if (static_cast<int>(w.size()) != arity_) fail(ErrorCode::InvalidSpec, "group cochain applied to word of wrong length");
    if (has_unit_letter(*group(), w)) return ModuleVector(ring_);
    return eval_(w);
  }

 private:
  int arity_;
  BimodulePtr target_;
  Ring ring_;
  Evaluator eval_;
};

inline ModuleVector conj_act(const Bimodule& N, const GroupElement& g, const ModuleVector& v) {
  ModuleVector out(v.ring());
  for (const auto& [m, c] : v) out.add(N.conj_left(g, m), c);
  return out;
}
inline ModuleVector conj_act_right(const Bimodule& N, const ModuleVector& v, const GroupElement& g) {
  ModuleVector out(v.ring());
  for (const auto& [m, c] : v) out.add(N.conj_right(m, g), c);
  return out;
}

// (delta u)(g_1..g_{p+1}) = (-1)^{p+1}(g_1.u(g_2..) + sum (-1)^i u(..g_i g_{i+1}..) + (-1)^{p+1} u(g_1..g_p)).
inline GroupCochain group_cochain_differential(const GroupCochain& u) {
  const int p = u.arity();
  const Ring ring = u.ring();
  const Scalar global = sign_scalar(ring, p + 1);
  return GroupCochain(p + 1, u.target(), ring, [u, p, ring, global](const Word& w) {
    const Bimodule& N = *u.target();
    const Group& G = *u.group();
    ModuleVector out = conj_act(N, w[0], u(Word(w.begin() + 1, w.end())));
    for (int i = 0; i < p; ++i) {
      Word merged(w.begin(), w.begin() + i);
      merged.push_back(G.multiply(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i) + 1]));
      merged.insert(merged.end(), w.begin() + i + 2, w.end());
      out.add_scaled(u(merged), sign_scalar(ring, i + 1));
    }
    out.add_scaled(u(Word(w.begin(), w.end() - 1)), sign_scalar(ring, p + 1));
    return out.scaled(global);
  });
}

// ---- transports

// xi(m[g_1|..|g_n]) = g_n^{-1}..g_1^{-1} m [g_1|..|g_n]
inline HochschildChain xi(const GroupChain& c) {
  const Bimodule& M = *c.module();
  const Group& G = *c.group();
  HochschildChain out(c.module(), c.ring());
  for (const auto& [w, coef] : c.terms())
    out.add(BarWord{M.left(G.inverse(word_product(G, w.letters)), w.m), w.letters}, coef);
  return out;
}

// Phi(m[g_1|..|g_n]) = g_1..g_n m [g_1|..|g_n]
inline GroupChain phi(const HochschildChain& c) {
  const Bimodule& M = *c.module();
  const Group& G = *c.group();
  GroupChain out(c.module(), c.ring());
  for (const auto& [w, coef] : c.terms()) out.add(BarWord{M.left(word_product(G, w.letters), w.m), w.letters}, coef);
  return out;
}

// xi(f)(g_1..g_n) = f(g_1..g_n) g_n^{-1}..g_1^{-1}
inline GroupCochain xi(const HochschildCochain& f) {
  return GroupCochain(f.arity(), f.target(), f.ring(), [f](const Word& w) {
    const Group& G = *f.group();
    return act_right(*f.target(), f(w), G.inverse(word_product(G, w)));
  });
}

inline HochschildCochain xi_inverse(const GroupCochain& u) {
  return HochschildCochain(u.arity(), u.target(), u.ring(), HochschildCochain::Backend::Rule,
                           [u](const Word& w) { return act_right(*u.target(), u(w), word_product(*u.group(), w)); });
}

// sigma([g_1|..|g_n]) = g_n^{-1}..g_1^{-1}[g_1|..|g_n] in C_*(A, A)
inline HochschildChain sigma(const BarElement& w, GroupPtr G) {
  const BimodulePtr A = Bimodule::regular(G);
  HochschildChain out(A, w.ring());
  for (const auto& [letters, coef] : w) out.add(BarWord{key_of(G->inverse(word_product(*G, letters))), letters}, coef);
  return out;
}

// Unit eta: k -> A~ applied to the coefficients of a chain with trivial coefficients.
inline GroupChain eta_push(const BarElement& w, GroupPtr G) {
  const BimodulePtr A = Bimodule::regular(G);
  GroupChain out(A, w.ring());
  for (const auto& [letters, coef] : w) out.add(BarWord{A->unit(), letters}, coef);
  return out;
}

inline BarElement bar_element(const HochschildChain& c) {
  if (c.module()->kind() != BimoduleKind::Trivial) fail(ErrorCode::BimoduleMismatch, "expected chains with trivial coefficients");
  BarElement out(c.ring());
  for (const auto& [w, coef] : c.terms()) out.add(w.letters, coef);
  return out;
}

// C_*(k[G], epsilon)
inline BarElement augment_chain(const HochschildChain& c) {
  if (c.module()->kind() != BimoduleKind::Regular) fail(ErrorCode::BimoduleMismatch, "expected chains in A");
  BarElement out(c.ring());
  for (const auto& [w, coef] : c.terms()) out.add(w.letters, coef);
  return out;
}

// Cyclic operator B on B(k[G]): rotations of [(g_1..g_n)^{-1}|g_1|..|g_n].
inline BarElement group_connes_B(const BarElement& w, const Group& G) {
  const Ring ring = w.ring();
  BarElement out(ring);
  for (const auto& [letters, coef] : w) {
    const std::size_t n = letters.size();
    Word cyc{G.inverse(word_product(G, letters))};
    cyc.insert(cyc.end(), letters.begin(), letters.end());
    for (std::size_t i = 0; i <= n; ++i) {
      Word rotated;
      for (std::size_t j = 0; j <= n; ++j) rotated.push_back(cyc[(i + j) % (n + 1)]);
      if (has_unit_letter(G, rotated)) continue;
      out.add(rotated, sign_scalar(ring, static_cast<int>(n * i)) * coef);
    }
  }
  return out;
}

// ---- Alexander-Whitney diagonal and the group (co)homology products

struct AWTerm {
  GroupElement left_coef;
  Word left;
  GroupElement right_coef;
  Word right;
  friend bool operator==(const AWTerm&, const AWTerm&) = default;
};

// AW(g_0[g_1|..|g_n]) = sum_p g_0[g_1|..|g_p] (x) g_0..g_p[g_{p+1}|..|g_n]
inline std::vector<AWTerm> aw_diagonal(const Group& G, const GroupElement& g0, const Word& w) {
  std::vector<AWTerm> out;
  GroupElement prefix = g0;
  for (std::size_t p = 0; p <= w.size(); ++p) {
    if (p > 0) prefix = G.multiply(prefix, w[p - 1]);
    out.push_back(AWTerm{g0, Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p)), prefix,
                         Word(w.begin() + static_cast<std::ptrdiff_t>(p), w.end())});
  }
  return out;
}

// Pairing M~ (x) N~ -> target: q onto (M (x)_A N)~, or k (x) N~ = N~ when M = k.
inline BalancedProduct quotient_pairing(const BimodulePtr& M, const BimodulePtr& N) { return balanced_product(M, N); }
inline BalancedProduct scalar_pairing(const BimodulePtr& M, const BimodulePtr& N) {
  if (M->kind() != BimoduleKind::Trivial) fail(ErrorCode::BimoduleMismatch, "scalar pairing expects trivial coefficients");
  return {N, [](const ModuleKey&, const ModuleKey& n) { return n; }};
}

// m[g_1|..|g_n] cap u = (-1)^{pn} pair(m.(g_1..g_p), u(g_1..g_p).(g_1..g_p))[g_{p+1}|..|g_n]
inline GroupChain group_cap(const GroupChain& z, const GroupCochain& u, const BalancedProduct& pairing) {
  check_ring(z.ring(), u.ring());
  const Bimodule& M = *z.module();
  const Bimodule& N = *u.target();
  const Group& G = *z.group();
  const Ring ring = z.ring();
  const int p = u.arity();
  GroupChain out(pairing.result, ring);
  if (p < 0) return out;
  for (const auto& [w, coef] : z.terms()) {
    const int n = static_cast<int>(w.letters.size());
    if (n < p) continue;
    for (const AWTerm& t : aw_diagonal(G, G.identity(), w.letters)) {
      if (static_cast<int>(t.left.size()) != p) continue;
      const ModuleKey m = M.conj_right(w.m, t.right_coef);
      const ModuleVector v = conj_act_right(N, u(t.left), t.right_coef);
      for (const auto& [nk, c] : v) out.add(BarWord{pairing.combine(m, nk), t.right}, sign_scalar(ring, p * n) * coef * c);
    }
  }
  return out;
}

inline GroupChain group_cap(const GroupChain& z, const GroupCochain& u) {
  return group_cap(z, u, quotient_pairing(z.module(), u.target()));
}

// Cap on representatives, refusing non-cycles and (finite groups) non-cocycles.
inline GroupChain group_cap_checked(const GroupChain& z, const GroupCochain& u, const BalancedProduct& pairing) {
  if (!group_chain_differential(z).is_zero()) fail(ErrorCode::NotACycle, "group cap needs a cycle");
  if (z.group()->is_finite()) {
    const FiniteHochschildComplex cx(u.target(), u.ring());
    const GroupCochain du = group_cochain_differential(u);
    const WordIndexer W = cx.words(static_cast<std::size_t>(du.arity()));
    for (std::size_t i = 0; i < W.count(); ++i)
      if (!du(W.word(i)).is_zero()) fail(ErrorCode::NotACocycle, "group cap needs a cocycle");
  }
  return group_cap(z, u, pairing);
}

// (u cup v)(g_1..g_{p+q}) = (-1)^{pq} q(u(g_1..g_p) (x) (g_1..g_p).v(g_{p+1}..g_{p+q}))
inline GroupCochain group_cup(const GroupCochain& u, const GroupCochain& v) {
  check_ring(u.ring(), v.ring());
  const BalancedProduct bp = quotient_pairing(u.target(), v.target());
  const int p = u.arity(), q = v.arity();
  const Scalar s = sign_scalar(u.ring(), p * q);
  return GroupCochain(p + q, bp.result, u.ring(), [u, v, bp, p, s](const Word& w) {
    const Word head(w.begin(), w.begin() + p);
    const Word tail(w.begin() + p, w.end());
    return tensor_values(bp, u(head), conj_act(*v.target(), word_product(*u.group(), head), v(tail))).scaled(s);
  });
}

// Pushes group cochain values along a bimodule map given on keys.
inline GroupCochain map_values(const GroupCochain& u, BimodulePtr target, std::function<ModuleKey(const ModuleKey&)> on_keys) {
  return GroupCochain(u.arity(), target, u.ring(), [u, on_keys](const Word& w) {
    ModuleVector out(u.ring());
    for (const auto& [m, c] : u(w)) out.add(on_keys(m), c);
    return out;
  });
}

inline GroupChain map_values(const GroupChain& z, BimodulePtr target, const std::function<ModuleKey(const ModuleKey&)>& on_keys) {
  GroupChain out(std::move(target), z.ring());
  for (const auto& [w, c] : z.terms()) out.add(BarWord{on_keys(w.m), w.letters}, c);
  return out;
}

// ---- Eckmann-Shapiro transports for finite groups, with tabled cochains

class EckmannShapiro {
 public:
  EckmannShapiro(BimodulePtr N, Ring ring) : N_(std::move(N)), ring_(std::move(ring)) {
    if (!N_->group()->is_finite()) fail(ErrorCode::InfiniteGroup, "Eckmann-Shapiro tables need a finite group");
  }

  const BimodulePtr& module() const { return N_; }

  GroupCochain to_group(const HochschildCochain& f) const { return tabulate(xi(f)); }
  HochschildCochain from_group(const GroupCochain& u) const {
    const FiniteHochschildComplex cx(N_, ring_);
    return cx.vector_to_cochain(cx.cochain_to_vector(xi_inverse(u)), u.arity());
  }
  GroupChain to_group(const HochschildChain& c) const { return phi(c); }
  HochschildChain from_group(const GroupChain& z) const { return xi(z); }

  GroupCochain tabulate(const GroupCochain& u) const {
    const FiniteHochschildComplex cx(N_, ring_);
    const WordIndexer W = cx.words(static_cast<std::size_t>(u.arity()));
    auto table = std::make_shared<std::map<Word, ModuleVector>>();
    for (std::size_t i = 0; i < W.count(); ++i) table->emplace(W.word(i), u(W.word(i)));
    const Ring ring = ring_;
    return GroupCochain(u.arity(), N_, ring_, [table, ring](const Word& w) {
      auto it = table->find(w);
      return it == table->end() ? ModuleVector(ring) : it->second;
    });
  }

  // Dimensions of H_n(G, N~) from the group complex itself, n in [0, max_degree].
  std::vector<std::size_t> group_homology_dims(int max_degree) const {
    const FiniteHochschildComplex cx(N_, ring_);
    auto matrix = [&](int n) {
      ExactMatrix D(ring_, cx.chain_dim(n - 1), cx.chain_dim(n));
      if (n <= 0) return D;
      const WordIndexer W = cx.words(static_cast<std::size_t>(n));
      const auto basis = N_->basis();
      for (std::size_t mi = 0; mi < basis.size(); ++mi)
        for (std::size_t wi = 0; wi < W.count(); ++wi) {
          const GroupChain x = GroupChain::basis(N_, ring_, basis[mi], W.word(wi));
          const SparseVector col = cx.chain_to_vector(group_chain_differential(x).as_hochschild_terms(), n - 1);
          for (const auto& [r, c] : col) D.set(r, mi * W.count() + wi, c);
        }
      return D;
    };
    std::vector<std::size_t> out;
    for (int n = 0; n <= max_degree; ++n) out.push_back(HomologyClasses(matrix(n + 1), matrix(n), n).dimension());
    return out;
  }

 private:
  BimodulePtr N_;
  Ring ring_;
};

// ---- commutation reports

struct ComparisonRow {
  std::string check;
  std::string group;
  std::string module;
  int degree = 0;
  bool ok = true;
  std::string witness;

  nlohmann::json to_json() const {
    return {{"check", check}, {"group", group}, {"module", module}, {"degree", degree},
            {"status", ok ? "PASS" : "FAIL"}, {"witness", witness}};
  }
};

namespace detail {

inline std::string coordinates_text(const std::vector<Scalar>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out + "]";
}

inline bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace detail

// Cap square: Phi(c cap f) against q(Phi(c) cap xi(f)), compared in HH_{n-p}(A, M (x)_A N).
inline std::vector<ComparisonRow> check_cap_diagram(const BimodulePtr& M, const BimodulePtr& N, Ring ring, int max_degree) {
  const GroupPtr G = M->group();
  const FiniteHH hm(M, ring, max_degree, true, false);
  const FiniteHH hn(N, ring, max_degree, false, true);
  const BimodulePtr MN = balanced_product(M, N).result;
  const FiniteHH hmn(MN, ring, max_degree, true, false);
  std::vector<ComparisonRow> rows;
  for (int n = 0; n <= max_degree; ++n) {
    ComparisonRow row{"cap", G->name(), M->name() + "," + N->name(), n, true, ""};
    std::size_t pairs = 0;
    for (int p = 0; p <= n; ++p)
      for (std::size_t i = 0; i < hm.homology(n).dimension(); ++i)
        for (std::size_t j = 0; j < hn.cohomology(p).dimension(); ++j) {
          const HochschildChain c = hm.chain_representative(n, i);
          const HochschildCochain f = hn.cochain_representative(p, j);
          const HochschildChain top = cap(c, f);
          const HochschildChain bottom = xi(group_cap(phi(c), xi(f)));
          const auto coords = hmn.chain_coordinates(top - bottom, n - p);
          ++pairs;
          if (!detail::all_zero(coords) && row.ok) {
            row.ok = false;
            row.witness = "p=" + std::to_string(p) + " class " + std::to_string(i) + "," + std::to_string(j) + " diff " +
                          detail::coordinates_text(coords);
          }
        }
    if (row.ok) row.witness = std::to_string(pairs) + " class pairs";
    rows.push_back(row);
  }
  return rows;
}

// Cup square: xi(f cup g) against q(xi f cup xi g), compared in HH^{p+q}(A, M (x)_A N).
inline std::vector<ComparisonRow> check_cup_diagram(const BimodulePtr& M, const BimodulePtr& N, Ring ring, int max_degree) {
  const GroupPtr G = M->group();
  const FiniteHH hm(M, ring, max_degree, false, true);
  const FiniteHH hn(N, ring, max_degree, false, true);
  const BimodulePtr MN = balanced_product(M, N).result;
  const FiniteHH hmn(MN, ring, max_degree, false, true);
  const EckmannShapiro es(MN, ring);
  std::vector<ComparisonRow> rows;
  for (int d = 0; d <= max_degree; ++d) {
    ComparisonRow row{"cup", G->name(), M->name() + "," + N->name(), d, true, ""};
    std::size_t pairs = 0;
    for (int p = 0; p <= d; ++p)
      for (std::size_t i = 0; i < hm.cohomology(p).dimension(); ++i)
        for (std::size_t j = 0; j < hn.cohomology(d - p).dimension(); ++j) {
          const HochschildCochain f = hm.cochain_representative(p, i);
          const HochschildCochain g = hn.cochain_representative(d - p, j);
          const HochschildCochain lhs = cup(f, g);
          const HochschildCochain rhs = es.from_group(group_cup(xi(f), xi(g)));
          const HochschildCochain diff = linear_combination({{Scalar::one(ring), lhs}, {Scalar(ring, -1), rhs}});
          const auto coords = hmn.cochain_coordinates(diff);
          ++pairs;
          if (!detail::all_zero(coords) && row.ok) {
            row.ok = false;
            row.witness = "p=" + std::to_string(p) + " diff " + detail::coordinates_text(coords);
          }
        }
    if (row.ok) row.witness = std::to_string(pairs) + " class pairs";
    rows.push_back(row);
  }
  return rows;
}

// sigma(z) cap f against xi(z cap xi(f)) for z in H_d(G, k), compared in HH_{d-p}(A, N).
inline std::vector<ComparisonRow> check_section_cap(const BimodulePtr& N, Ring ring, int max_degree) {
  const GroupPtr G = N->group();
  const BimodulePtr k = Bimodule::trivial(G);
  const FiniteHH hk(k, ring, max_degree, true, false);
  const FiniteHH hn(N, ring, max_degree, true, true);
  std::vector<ComparisonRow> rows;
  for (int d = 0; d <= max_degree; ++d) {
    ComparisonRow row{"section-cap", G->name(), N->name(), d, true, ""};
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < hk.homology(d).dimension(); ++i) {
      const HochschildChain zk = hk.chain_representative(d, i);
      const HochschildChain sz = sigma(bar_element(zk), G);
      const GroupChain zg(k, zk.terms());
      for (int p = 0; p <= d; ++p)
        for (std::size_t j = 0; j < hn.cohomology(p).dimension(); ++j) {
          const HochschildCochain f = hn.cochain_representative(p, j);
          const HochschildChain top = cap(sz, f);
          const HochschildChain bottom = xi(group_cap(zg, xi(f), scalar_pairing(k, N)));
          const auto coords = hn.chain_coordinates(top - bottom, d - p);
          ++pairs;
          if (!detail::all_zero(coords) && row.ok) {
            row.ok = false;
            row.witness = "p=" + std::to_string(p) + " diff " + detail::coordinates_text(coords);
          }
        }
    }
    if (row.ok) row.witness = std::to_string(pairs) + " class pairs";
    rows.push_back(row);
  }
  return rows;
}

// The four section properties on all normalized words of length <= max_length.
inline std::vector<ComparisonRow> check_section_properties(const GroupPtr& G, Ring ring, int max_length) {
  const BimodulePtr A = Bimodule::regular(G);
  const BimodulePtr k = Bimodule::trivial(G);
  const FiniteHochschildComplex cx(A, ring);
  const FiniteHH hk(k, ring, max_length, true, false);
  const FiniteHH ha(A, ring, max_length, true, false);
  std::vector<ComparisonRow> rows;
  auto record = [&](const std::string& name, int n, bool ok, const std::string& witness) {
    rows.push_back(ComparisonRow{name, G->name(), "A", n, ok, witness});
  };
  for (int n = 0; n <= max_length; ++n) {
    const WordIndexer W = cx.words(static_cast<std::size_t>(n));
    std::string cyc, comp, sect;
    for (std::size_t i = 0; i < W.count(); ++i) {
      const BarElement w(ring, W.word(i));
      const HochschildChain s = sigma(w, G);
      if (cyc.empty() && !(connes_B(s) == sigma(group_connes_B(w, *G), G))) cyc = "word " + std::to_string(i);
      if (comp.empty() && !(s == xi(eta_push(w, G)))) comp = "word " + std::to_string(i);
      if (sect.empty() && !(augment_chain(s) == w)) sect = "word " + std::to_string(i);
    }
    record("section-cyclic", n, cyc.empty(), cyc.empty() ? std::to_string(W.count()) + " words" : cyc);
    record("section-composite", n, comp.empty(), comp.empty() ? std::to_string(W.count()) + " words" : comp);
    std::string homology;
    for (std::size_t i = 0; i < hk.homology(n).dimension(); ++i) {
      const BarElement z = bar_element(hk.chain_representative(n, i));
      if (!ha.chain_is_boundary(sigma(z, G) - xi(eta_push(z, G)), n)) homology = "class " + std::to_string(i);
    }
    record("section-tor", n, homology.empty(),
           homology.empty() ? std::to_string(hk.homology(n).dimension()) + " classes" : homology);
    record("section-splits", n, sect.empty(), sect.empty() ? std::to_string(W.count()) + " words" : sect);
  }
  return rows;
}

}  // namespace hochbv
