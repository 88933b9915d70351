#pragma once

#include <concepts>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "hochbv/hochschild.hpp"

namespace hochbv {

// a x_gen b in the free bimodule P_n = A (x) V_n (x) A.
struct ResTerm {
  GroupElement left;
  std::size_t gen;
  GroupElement right;
  friend auto operator<=>(const ResTerm&, const ResTerm&) = default;
  friend bool operator==(const ResTerm&, const ResTerm&) = default;
};
using ResElement = LinearCombination<ResTerm>;

// a[a_1|..|a_n]b in the normalized bar resolution of A.
struct BarResTerm {
  GroupElement left;
  Word word;
  GroupElement right;
  friend auto operator<=>(const BarResTerm&, const BarResTerm&) = default;
  friend bool operator==(const BarResTerm&, const BarResTerm&) = default;
};
using BarResElement = LinearCombination<BarResTerm>;

template <class R>
concept BimoduleResolution = requires(const R& r, int n, std::size_t i, const ResTerm& t, const GroupElement& g) {
  { r.group() } -> std::convertible_to<GroupPtr>;
  { r.ring() } -> std::convertible_to<Ring>;
  { r.length() } -> std::convertible_to<int>;
  { r.rank(n) } -> std::convertible_to<std::size_t>;
  { r.differential_on_generator(n, i) } -> std::same_as<ResElement>;
  { r.homotopy_on_term(n, t) } -> std::same_as<ResElement>;
  { r.section(g) } -> std::same_as<ResElement>;
  { r.generator_name(n, i) } -> std::convertible_to<std::string>;
};

// ---- generic operations on resolutions

inline ResElement sandwich(const Group& G, const GroupElement& a, const ResElement& x, const GroupElement& b) {
  ResElement out(x.ring());
  for (const auto& [t, c] : x) out.add(ResTerm{G.multiply(a, t.left), t.gen, G.multiply(t.right, b)}, c);
  return out;
}

template <BimoduleResolution R>
ResElement res_differential(const R& P, int n, const ResElement& x) {
  ResElement out(P.ring());
  if (n <= 0) return out;
  const GroupPtr G = P.group();
  for (const auto& [t, c] : x) out.add_scaled(sandwich(*G, t.left, P.differential_on_generator(n, t.gen), t.right), c);
  return out;
}

// mu: P_0 -> A, a x_0 b -> ab
template <BimoduleResolution R>
GroupAlgebraElement res_augmentation(const R& P, const ResElement& x) {
  const GroupPtr G = P.group();
  GroupAlgebraElement out(G, P.ring());
  for (const auto& [t, c] : x) out += GroupAlgebraElement::basis(G, P.ring(), G->multiply(t.left, t.right)).scaled(c);
  return out;
}

template <BimoduleResolution R>
ResElement res_section(const R& P, const GroupAlgebraElement& a) {
  ResElement out(P.ring());
  for (const auto& [g, c] : a.terms()) out.add_scaled(P.section(g), c);
  return out;
}

template <BimoduleResolution R>
ResElement res_homotopy(const R& P, int n, const ResElement& x) {
  ResElement out(P.ring());
  if (n >= P.length()) return out;
  for (const auto& [t, c] : x) out.add_scaled(P.homotopy_on_term(n, t), c);
  return out;
}

// ---- Koszul resolution of k[Z^d]

enum class SectionSide { Right, Left };

// P_n has basis x_S for S subset of {0..d-1}, |S| = n, ordered lexicographically;
// d(x_S) = sum_j (-1)^j (t_{s_j} x_{S - s_j} - x_{S - s_j} t_{s_j}). The contracting homotopy is the
// tensor product of the one-variable telescoping homotopies: H = sum_i (s eps)^{(x) i} (x) h_i (x) 1.
class KoszulResolution {
 public:
  KoszulResolution(int d, Ring ring, SectionSide side = SectionSide::Right)
      : group_(Group::free_abelian(d)), ring_(ring), d_(d), side_(side) {
    if (d < 1) fail(ErrorCode::UnsupportedRank, "Koszul resolution needs rank >= 1");
    subsets_.resize(static_cast<std::size_t>(d + 1));
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < d; ++i)
        if (mask & (1u << i)) s.push_back(i);
      subsets_[s.size()].push_back(s);
    }
    for (auto& level : subsets_) std::sort(level.begin(), level.end());
    for (const auto& level : subsets_)
      for (std::size_t i = 0; i < level.size(); ++i) index_[level[i]] = i;
  }

  const GroupPtr& group() const { return group_; }
  const Ring& ring() const { return ring_; }
  int length() const { return d_; }
  int rank_of_group() const { return d_; }
  SectionSide side() const { return side_; }
  std::size_t rank(int n) const { return n < 0 || n > d_ ? 0 : subsets_[static_cast<std::size_t>(n)].size(); }
  const std::vector<int>& subset(int n, std::size_t i) const { return subsets_.at(static_cast<std::size_t>(n)).at(i); }
  std::size_t index_of(const std::vector<int>& s) const { return index_.at(s); }

  std::string generator_name(int n, std::size_t i) const {
    if (n == 0) return "x0";
    std::string out;
    for (int v : subset(n, i)) out += (out.empty() ? "e" : "^e") + std::to_string(v + 1);
    return out;
  }

  ResElement differential_on_generator(int n, std::size_t i) const {
    ResElement out(ring_);
    if (n <= 0 || n > d_) return out;
    const auto& S = subset(n, i);
    const GroupElement e = group_->identity();
    for (std::size_t j = 0; j < S.size(); ++j) {
      std::vector<int> rest = S;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      const std::size_t g = index_of(rest);
      const GroupElement t = group_->generator(S[j]);
      const Scalar s = sign_scalar(ring_, static_cast<int>(j));
      out.add(ResTerm{t, g, e}, s);
      out.add(ResTerm{e, g, t}, -s);
    }
    return out;
  }

  ResElement section(const GroupElement& g) const {
    const GroupElement e = group_->identity();
    return ResElement(ring_, side_ == SectionSide::Right ? ResTerm{e, 0, g} : ResTerm{g, 0, e});
  }

  ResElement homotopy_on_term(int n, const ResTerm& t) const {
    ResElement out(ring_);
    if (n < 0 || n >= d_) return out;
    const auto& S = subset(n, t.gen);
    std::vector<bool> in_s(static_cast<std::size_t>(d_), false);
    for (int v : S) in_s[static_cast<std::size_t>(v)] = true;
    for (int i = 0; i < d_; ++i) {
      if (in_s[static_cast<std::size_t>(i)]) break;  // factors before i must sit in degree 0
      // factors j < i replaced by s eps; factor i by the one-variable homotopy
      GroupElement left = t.left, right = t.right;
      for (int j = 0; j < i; ++j) {
        const std::int64_t total = t.left.c[static_cast<std::size_t>(j)] + t.right.c[static_cast<std::size_t>(j)];
        left.c[static_cast<std::size_t>(j)] = side_ == SectionSide::Right ? 0 : total;
        right.c[static_cast<std::size_t>(j)] = side_ == SectionSide::Right ? total : 0;
      }
      std::vector<int> target = S;
      target.insert(target.begin(), i);
      const std::size_t gen = index_of(target);
      const std::int64_t a = t.left.c[static_cast<std::size_t>(i)], b = t.right.c[static_cast<std::size_t>(i)];
      for (const auto& [ea, eb, sign] : one_variable_homotopy(a, b)) {
        GroupElement l = left, r = right;
        l.c[static_cast<std::size_t>(i)] = ea;
        r.c[static_cast<std::size_t>(i)] = eb;
        out.add(ResTerm{l, gen, r}, Scalar(ring_, sign));
      }
    }
    return out;
  }

 private:
  // h(t^a x0 t^b) as terms t^ea x1 t^eb with signs.
  std::vector<std::tuple<std::int64_t, std::int64_t, int>> one_variable_homotopy(std::int64_t a, std::int64_t b) const {
    std::vector<std::tuple<std::int64_t, std::int64_t, int>> out;
    if (side_ == SectionSide::Right) {
      // t^a x0 t^b - x0 t^{a+b}
      if (a > 0)
        for (std::int64_t m = 0; m < a; ++m) out.emplace_back(m, a - 1 - m + b, 1);
      else
        for (std::int64_t m = a; m < 0; ++m) out.emplace_back(m, a - 1 - m + b, -1);
    } else {
      // t^a x0 t^b - t^{a+b} x0
      if (b > 0)
        for (std::int64_t m = 0; m < b; ++m) out.emplace_back(a + b - 1 - m, m, -1);
      else
        for (std::int64_t m = b; m < 0; ++m) out.emplace_back(a + b - 1 - m, m, 1);
    }
    return out;
  }

  GroupPtr group_;
  Ring ring_;
  int d_;
  SectionSide side_;
  std::vector<std::vector<std::vector<int>>> subsets_;
  std::map<std::vector<int>, std::size_t> index_;
};

// ---- periodic resolution of k[Z/n], truncated at length L

// d(x_k) = s x_{k-1} - x_{k-1} s for k odd, sum_i s^i x_{k-1} s^{n-1-i} for k even.
class PeriodicResolution {
 public:
  PeriodicResolution(int n, Ring ring, int length) : group_(Group::cyclic(n)), ring_(ring), n_(n), length_(length) {
    if (n < 2) fail(ErrorCode::InvalidGroup, "periodic resolution needs n >= 2");
    if (length < 0) fail(ErrorCode::InvalidSpec, "negative truncation length");
  }

  const GroupPtr& group() const { return group_; }
  const Ring& ring() const { return ring_; }
  int length() const { return length_; }
  int order() const { return n_; }
  std::size_t rank(int k) const { return k < 0 || k > length_ ? 0 : 1; }
  std::string generator_name(int k, std::size_t) const { return "x" + std::to_string(k); }

  GroupElement s(std::int64_t i) const { return group_->element(static_cast<std::size_t>(((i % n_) + n_) % n_)); }

  ResElement differential_on_generator(int k, std::size_t) const {
    ResElement out(ring_);
    if (k <= 0 || k > length_) return out;
    if (k % 2 == 1) {
      out.add(ResTerm{s(1), 0, s(0)}, Scalar::one(ring_));
      out.add(ResTerm{s(0), 0, s(1)}, Scalar(ring_, -1));
    } else {
      for (int i = 0; i < n_; ++i) out.add(ResTerm{s(i), 0, s(n_ - 1 - i)}, Scalar::one(ring_));
    }
    return out;
  }

  ResElement section(const GroupElement& g) const { return ResElement(ring_, ResTerm{s(0), 0, g}); }

  ResElement homotopy_on_term(int k, const ResTerm& t) const {
    ResElement out(ring_);
    if (k < 0 || k >= length_) return out;
    const std::int64_t a = t.left.c[0], b = t.right.c[0];
    if (k % 2 == 0) {
      for (std::int64_t m = 0; m < a; ++m) out.add(ResTerm{s(m), 0, s(a - 1 - m + b)}, Scalar::one(ring_));
    } else if (a == n_ - 1) {
      out.add(ResTerm{s(0), 0, s(b)}, Scalar::one(ring_));
    }
    return out;
  }

 private:
  GroupPtr group_;
  Ring ring_;
  int n_;
  int length_;
};

// ---- normalized bar resolution

inline BarResElement bar_res_differential(const Group& G, const BarResElement& x) {
  BarResElement out(x.ring());
  const Ring ring = x.ring();
  auto add = [&](BarResTerm t, const Scalar& c) {
    if (!has_unit_letter(G, t.word)) out.add(t, c);
  };
  for (const auto& [t, c] : x) {
    const std::size_t n = t.word.size();
    if (n == 0) continue;
    add(BarResTerm{G.multiply(t.left, t.word[0]), Word(t.word.begin() + 1, t.word.end()), t.right}, c);
    for (std::size_t i = 1; i < n; ++i) {
      Word merged;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        merged.push_back(j == i - 1 ? G.multiply(t.word[i - 1], t.word[i]) : t.word[j]);
      }
      add(BarResTerm{t.left, std::move(merged), t.right}, sign_scalar(ring, static_cast<int>(i)) * c);
    }
    add(BarResTerm{t.left, Word(t.word.begin(), t.word.end() - 1), G.multiply(t.word.back(), t.right)},
        sign_scalar(ring, static_cast<int>(n)) * c);
  }
  return out;
}

// h(a_0[w]a') = 1[a_0|w]a'
inline BarResElement bar_res_homotopy(const Group& G, const BarResElement& x) {
  BarResElement out(x.ring());
  for (const auto& [t, c] : x) {
    if (G.is_identity(t.left)) continue;
    Word w{t.left};
    w.insert(w.end(), t.word.begin(), t.word.end());
    out.add(BarResTerm{G.identity(), std::move(w), t.right}, c);
  }
  return out;
}

inline BarResElement bar_sandwich(const Group& G, const GroupElement& a, const BarResElement& x, const GroupElement& b) {
  BarResElement out(x.ring());
  for (const auto& [t, c] : x) out.add(BarResTerm{G.multiply(a, t.left), t.word, G.multiply(t.right, b)}, c);
  return out;
}

// ---- comparison maps phi: P -> Bar and psi: Bar -> P, with small-model transports

struct SmallKey {
  ModuleKey m;
  std::size_t gen;
  friend auto operator<=>(const SmallKey&, const SmallKey&) = default;
  friend bool operator==(const SmallKey&, const SmallKey&) = default;
};
// Element of M (x)_{A^e} P_n: m (x) x_gen.
using SmallChain = LinearCombination<SmallKey>;

// Element of Hom_{A^e}(P_p, N): values on generators.
struct SmallCochain {
  int degree;
  BimodulePtr target;
  std::vector<ModuleVector> values;
};

template <BimoduleResolution R>
class Comparison {
 public:
  explicit Comparison(R resolution) : P_(std::move(resolution)), cache_(std::make_shared<Cache>()) {}

  const R& resolution() const { return P_; }
  const GroupPtr& group() const { return P_.group(); }
  const Ring& ring() const { return P_.ring(); }

  // phi_n(x_i) = h_Bar(phi_{n-1}(d x_i)), phi_0(x_0) = 1[]1
  BarResElement lift_generator(int n, std::size_t i) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->phi.find({n, i});
      if (it != cache_->phi.end()) return it->second;
    }
    const Group& G = *group();
    BarResElement out(ring());
    if (n == 0)
      out.add(BarResTerm{G.identity(), {}, G.identity()}, Scalar::one(ring()));
    else
      out = bar_res_homotopy(G, lift(n - 1, P_.differential_on_generator(n, i)));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->phi.emplace(std::pair{n, i}, out);
    return out;
  }

  BarResElement lift(int n, const ResElement& x) const {
    BarResElement out(ring());
    for (const auto& [t, c] : x) out.add_scaled(bar_sandwich(*group(), t.left, lift_generator(n, t.gen), t.right), c);
    return out;
  }

  // psi_n(1[w]1) = h_P(psi_{n-1}(d 1[w]1)), psi_0(1[]1) = x_0
  ResElement project_word(const Word& w) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->psi.find(w);
      if (it != cache_->psi.end()) return it->second;
    }
    const Group& G = *group();
    const int n = static_cast<int>(w.size());
    ResElement out(ring());
    if (has_unit_letter(G, w) || n > P_.length()) {
    } else if (n == 0) {
      out.add(ResTerm{G.identity(), 0, G.identity()}, Scalar::one(ring()));
    } else {
      const BarResElement boundary = bar_res_differential(G, BarResElement(ring(), BarResTerm{G.identity(), w, G.identity()}));
      out = res_homotopy(P_, n - 1, project(boundary));
    }
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->psi.emplace(w, out);
    return out;
  }

  ResElement project(const BarResElement& x) const {
    ResElement out(ring());
    for (const auto& [t, c] : x) out.add_scaled(sandwich(*group(), t.left, project_word(t.word), t.right), c);
    return out;
  }

  // m[w] -> m (x) psi(1[w]1), with m (x) (a x b) -> b m a.
  SmallChain to_small(const HochschildChain& c) const {
    const Bimodule& M = *c.module();
    SmallChain out(ring());
    for (const auto& [w, coef] : c.terms())
      for (const auto& [t, v] : project_word(w.letters)) out.add(SmallKey{M.left(t.right, M.right(w.m, t.left)), t.gen}, coef * v);
    return out;
  }

  // m (x) x_i -> m (x) phi(x_i), with m (x) a[w]b -> (b m a)[w].
  HochschildChain from_small(const SmallChain& s, int n, const BimodulePtr& M) const {
    HochschildChain out(M, ring());
    for (const auto& [k, coef] : s)
      for (const auto& [t, v] : lift_generator(n, k.gen)) out.add(BarWord{M->left(t.right, M->right(k.m, t.left)), t.word}, coef * v);
    return out;
  }

  // F = f o psi on bar words (resolution-transported backend).
  HochschildCochain transport_cochain(const SmallCochain& f) const {
    const Comparison self = *this;
    const Ring r = ring();
    return HochschildCochain(f.degree, f.target, r, HochschildCochain::Backend::Transported, [self, f, r](const Word& w) {
      ModuleVector out(r);
      for (const auto& [t, v] : self.project_word(w))
        for (const auto& [m, c] : f.values.at(t.gen)) out.add(f.target->left(t.left, f.target->right(m, t.right)), v * c);
      return out;
    });
  }

  // f(x_i) = F(phi(x_i)), F(a[w]b) = a F(w) b.
  SmallCochain restrict_cochain(const HochschildCochain& F) const {
    const int p = F.arity();
    SmallCochain out{p, F.target(), {}};
    for (std::size_t i = 0; i < P_.rank(p); ++i) {
      ModuleVector v(ring());
      for (const auto& [t, c] : lift_generator(p, i))
        for (const auto& [m, a] : F(t.word)) v.add(F.target()->left(t.left, F.target()->right(m, t.right)), c * a);
      out.values.push_back(std::move(v));
    }
    return out;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<int, std::size_t>, BarResElement> phi;
    std::map<Word, ResElement> psi;
  };
  R P_;
  std::shared_ptr<Cache> cache_;
};

// ---- small models as finite complexes (finite groups) and over A^e (any group)

// M (x)_{A^e} P_n: index = gen * dim M + module index.
template <BimoduleResolution R>
ExactMatrix small_chain_differential(const R& P, const BimodulePtr& M, int n) {
  const auto basis = M->basis();
  const std::size_t dm = basis.size();
  ExactMatrix out(P.ring(), P.rank(n - 1) * dm, P.rank(n) * dm);
  if (n <= 0) return out;
  for (std::size_t i = 0; i < P.rank(n); ++i) {
    const ResElement d = P.differential_on_generator(n, i);
    for (std::size_t mi = 0; mi < dm; ++mi)
      for (const auto& [t, c] : d) out.add(t.gen * dm + M->index(M->left(t.right, M->right(basis[mi], t.left))), i * dm + mi, c);
  }
  return out;
}

// Hom_{A^e}(P_p, N) -> Hom_{A^e}(P_{p+1}, N): (Df)(x_j) = (-1)^{p+1} f(d x_j); index = gen * dim N + module index.
template <BimoduleResolution R>
ExactMatrix small_cochain_differential(const R& P, const BimodulePtr& N, int p) {
  const auto basis = N->basis();
  const std::size_t dn = basis.size();
  ExactMatrix out(P.ring(), P.rank(p + 1) * dn, P.rank(p) * dn);
  if (p < 0) return out;
  const Scalar sign = sign_scalar(P.ring(), p + 1);
  for (std::size_t j = 0; j < P.rank(p + 1); ++j)
    for (const auto& [t, c] : P.differential_on_generator(p + 1, j))
      for (std::size_t mi = 0; mi < dn; ++mi)
        out.add(j * dn + N->index(N->left(t.left, N->right(basis[mi], t.right))), t.gen * dn + mi, sign * c);
  return out;
}

// Differential of the small model with entries in A^e: entry (j, i) is the sum of c (l|r) acting by m -> l m r.
struct EnvelopingMatrix {
  std::size_t rows = 0, cols = 0;
  std::map<std::pair<std::size_t, std::size_t>, EnvelopingElement> entries;
  // Probing the unit is faithful for A(x)A, for k, and for A commutative (Z^d); finite groups are enumerated.
  bool is_zero_on(const Bimodule& M) const {
    const std::vector<ModuleKey> probes = M.group()->is_finite() ? M.basis() : std::vector<ModuleKey>{M.unit()};
    for (const auto& [rc, e] : entries)
      for (const auto& m : probes) {
        ModuleVector v(e.ring());
        for (const auto& [lr, c] : e.terms()) v.add(M.right(M.left(lr.first, m), lr.second), c);
        if (!v.is_zero()) return false;
      }
    return true;
  }
};

struct SmallComplex {
  bool chains;
  std::vector<std::size_t> ranks;             // ranks over A^e-generators, degrees 0..L
  std::vector<EnvelopingMatrix> differentials;  // chains: d_n for n = 1..L; cochains: D_p for p = 0..L-1
  bool differentials_vanish;
};

template <BimoduleResolution R>
SmallComplex hochschild_via_resolution(const R& P, const BimodulePtr& M, bool chains) {
  if (!(*M->group() == *P.group())) fail(ErrorCode::GroupMismatch, "module and resolution over different groups");
  if (chains && M->kind() == BimoduleKind::Outer && !M->group()->is_finite())
    fail(ErrorCode::UnsupportedModule, "chains with coefficients in A(x)A over an infinite group are not supported");
  SmallComplex out{chains, {}, {}, true};
  for (int n = 0; n <= P.length(); ++n) out.ranks.push_back(P.rank(n));
  const GroupPtr G = P.group();
  for (int n = 1; n <= P.length(); ++n) {
    EnvelopingMatrix m;
    m.rows = chains ? P.rank(n - 1) : P.rank(n);
    m.cols = chains ? P.rank(n) : P.rank(n - 1);
    const Scalar sign = sign_scalar(P.ring(), n);
    for (std::size_t i = 0; i < P.rank(n); ++i)
      for (const auto& [t, c] : P.differential_on_generator(n, i)) {
        const auto key = chains ? std::pair{t.gen, i} : std::pair{i, t.gen};
        auto [it, inserted] = m.entries.try_emplace(key, G, P.ring());
        // chains: m (x) a x b -> b m a; cochains: f(a x b) = a f(x) b with the (-1)^{p+1} sign, p = n - 1
        if (chains)
          it->second.add(t.right, t.left, c);
        else
          it->second.add(t.left, t.right, sign * c);
      }
    if (!m.is_zero_on(*M)) out.differentials_vanish = false;
    out.differentials.push_back(std::move(m));
  }
  return out;
}

// Homology dimensions of M (x)_{A^e} P (chains) or Hom(P, M) (cochains) for a finite group.
template <BimoduleResolution R>
std::vector<HomologyPresentation> small_model_homology(const R& P, const BimodulePtr& M, bool chains, int lo, int hi) {
  if (!P.group()->is_finite()) fail(ErrorCode::InfiniteGroup, "finite small-model homology needs a finite group");
  if (hi + 1 > P.length()) fail(ErrorCode::InvalidSpec, "resolution truncated below the requested degree");
  std::vector<HomologyPresentation> out;
  for (int n = lo; n <= hi; ++n) {
    if (chains)
      out.push_back(homology_at(small_chain_differential(P, M, n + 1), small_chain_differential(P, M, n), P.ring(), n));
    else {
      const ExactMatrix incoming = n == 0 ? ExactMatrix(P.ring(), P.rank(0) * M->dimension(), 0)
                                          : small_cochain_differential(P, M, n - 1);
      out.push_back(homology_at(incoming, small_cochain_differential(P, M, n), P.ring(), n));
    }
  }
  return out;
}

// ---- canonical dump

inline nlohmann::json res_element_json(const Group& G, const ResElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [t, c] : x) terms.push_back({c.to_string(), G.format(t.left), t.gen, G.format(t.right)});
  return terms;
}

template <BimoduleResolution R>
nlohmann::json resolution_to_json(const R& P) {
  nlohmann::json out;
  out["group"] = P.group()->name();
  out["ring"] = P.ring().to_string();
  nlohmann::json ranks = nlohmann::json::array();
  for (int n = 0; n <= P.length(); ++n) ranks.push_back(P.rank(n));
  out["ranks"] = ranks;
  nlohmann::json diffs = nlohmann::json::array();
  for (int n = 1; n <= P.length(); ++n) {
    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t i = 0; i < P.rank(n); ++i)
      gens.push_back({{"generator", P.generator_name(n, i)}, {"image", res_element_json(*P.group(), P.differential_on_generator(n, i))}});
    diffs.push_back({{"degree", n}, {"generators", gens}});
  }
  out["differentials"] = diffs;
  return out;
}

}  // namespace hochbv
