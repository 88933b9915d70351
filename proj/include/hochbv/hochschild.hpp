#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hochbv/group_algebra.hpp"
#include "hochbv/homology.hpp"

namespace hochbv {

using Word = std::vector<GroupElement>;

// m[a_1|...|a_n]
struct BarWord {
  ModuleKey m;
  Word letters;
  friend auto operator<=>(const BarWord&, const BarWord&) = default;
  friend bool operator==(const BarWord&, const BarWord&) = default;
};

inline bool has_unit_letter(const Group& G, const Word& w) {
  return std::any_of(w.begin(), w.end(), [&](const GroupElement& g) { return G.is_identity(g); });
}

// Element of C_*(A, M).
class HochschildChain {
 public:
  using Terms = LinearCombination<BarWord>;

  HochschildChain(BimodulePtr module, Ring ring) : module_(std::move(module)), terms_(ring) {}
  HochschildChain(BimodulePtr module, Terms terms) : module_(std::move(module)), terms_(std::move(terms)) {}

  static HochschildChain basis(BimodulePtr module, Ring ring, ModuleKey m, Word letters) {
    HochschildChain c(std::move(module), ring);
    c.add(BarWord{std::move(m), std::move(letters)}, Scalar::one(ring));
    return c;
  }

  const BimodulePtr& module() const { return module_; }
  const Ring& ring() const { return terms_.ring(); }
  const Terms& terms() const { return terms_; }
  const GroupPtr& group() const { return module_->group(); }
  bool is_zero() const { return terms_.is_zero(); }

  // Word length of the terms, or -1 when zero.
  int degree() const {
    if (terms_.is_zero()) return -1;
    return static_cast<int>(terms_.begin()->first.letters.size());
  }

  void add(const BarWord& w, const Scalar& c) { terms_.add(w, c); }
  void add_scaled(const HochschildChain& o, const Scalar& c) {
    check_same_module(o);
    terms_.add_scaled(o.terms_, c);
  }
  HochschildChain& operator+=(const HochschildChain& o) {
    check_same_module(o);
    terms_ += o.terms_;
    return *this;
  }
  HochschildChain& operator-=(const HochschildChain& o) {
    check_same_module(o);
    terms_ -= o.terms_;
    return *this;
  }
  friend HochschildChain operator+(HochschildChain a, const HochschildChain& b) { return a += b; }
  friend HochschildChain operator-(HochschildChain a, const HochschildChain& b) { return a -= b; }
  HochschildChain scaled(const Scalar& c) const { return HochschildChain(module_, terms_.scaled(c)); }
  HochschildChain operator-() const { return scaled(Scalar(ring(), -1)); }

  friend bool operator==(const HochschildChain& a, const HochschildChain& b) {
    return *a.module_ == *b.module_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.to_string() + "*" + module_->format(w.m) + "[";
      for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += "|";
        out += group()->format(w.letters[i]);
      }
      out += "]";
    }
    return out;
  }

 private:
  void check_same_module(const HochschildChain& o) const {
    if (!(*module_ == *o.module_)) fail(ErrorCode::BimoduleMismatch, module_->name() + " vs " + o.module_->name());
  }

  BimodulePtr module_;
  Terms terms_;
};

// d(m[a_1..a_n]) = m a_1[a_2..] + sum_{i=1}^{n-1} (-1)^i m[..a_i a_{i+1}..] + (-1)^n a_n m[a_1..a_{n-1}]
inline HochschildChain chain_differential(const HochschildChain& c) {
  const Bimodule& M = *c.module();
  const Group& G = *c.group();
  const Ring ring = c.ring();
  HochschildChain out(c.module(), ring);
  for (const auto& [w, coef] : c.terms()) {
    const std::size_t n = w.letters.size();
    if (n == 0) continue;
    out.add(BarWord{M.right(w.m, w.letters[0]), Word(w.letters.begin() + 1, w.letters.end())}, coef);
    for (std::size_t i = 1; i < n; ++i) {
      Word merged;
      merged.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        merged.push_back(j == i - 1 ? G.multiply(w.letters[i - 1], w.letters[i]) : w.letters[j]);
      }
      out.add(BarWord{w.m, std::move(merged)}, sign_scalar(ring, static_cast<int>(i)) * coef);
    }
    out.add(BarWord{M.left(w.letters[n - 1], w.m), Word(w.letters.begin(), w.letters.end() - 1)},
            sign_scalar(ring, static_cast<int>(n)) * coef);
  }
  return out;
}

inline HochschildChain normalize(const HochschildChain& c) {
  HochschildChain out(c.module(), c.ring());
  for (const auto& [w, coef] : c.terms())
    if (!has_unit_letter(*c.group(), w.letters)) out.add(w, coef);
  return out;
}

inline HochschildChain normalized_differential(const HochschildChain& c) { return normalize(chain_differential(c)); }

// B(a_0[a_1..a_n]) = sum_i (-1)^{ni} 1[a_i..a_n|a_0|a_1..a_{i-1}], normalized.
// sign = -1 flips B globally (fault injection for negative controls).
inline HochschildChain connes_B(const HochschildChain& c, int sign = 1) {
  if (c.module()->kind() != BimoduleKind::Regular)
    fail(ErrorCode::CoefficientsNotInA, "Connes B needs coefficients in A, got " + c.module()->name());
  const Group& G = *c.group();
  const Ring ring = c.ring();
  const ModuleKey one = c.module()->unit();
  HochschildChain out(c.module(), ring);
  for (const auto& [w, coef] : c.terms()) {
    const std::size_t n = w.letters.size();
    Word cyc;
    cyc.reserve(n + 1);
    cyc.push_back(element_of(w.m));
    cyc.insert(cyc.end(), w.letters.begin(), w.letters.end());
    for (std::size_t i = 0; i <= n; ++i) {
      Word rotated;
      rotated.reserve(n + 1);
      for (std::size_t j = 0; j <= n; ++j) rotated.push_back(cyc[(i + j) % (n + 1)]);
      if (has_unit_letter(G, rotated)) continue;
      out.add(BarWord{one, std::move(rotated)}, sign_scalar(ring, static_cast<int>(n * i)) * coef * Scalar(ring, sign));
    }
  }
  return out;
}

// Element of C^p(A, N): an evaluator on p-letter words of group elements.
class HochschildCochain {
 public:
  enum class Backend { Table, Rule, Transported };
  using Evaluator = std::function<ModuleVector(const Word&)>;
  using Table = std::map<Word, ModuleVector>;

  HochschildCochain(int arity, BimodulePtr target, Ring ring, Backend backend, Evaluator eval, bool normalized = true)
      : arity_(arity), target_(std::move(target)), ring_(ring), backend_(backend), eval_(std::move(eval)),
        normalized_(normalized) {}

  static HochschildCochain from_table(int arity, BimodulePtr target, Ring ring, Table table, bool normalized = true) {
    auto shared = std::make_shared<const Table>(std::move(table));
    return HochschildCochain(arity, std::move(target), ring, Backend::Table,
                             [shared, ring](const Word& w) {
                               auto it = shared->find(w);
                               return it == shared->end() ? ModuleVector(ring) : it->second;
                             },
                             normalized);
  }

  // 0-cochain with value x.
  static HochschildCochain constant(BimodulePtr target, const ModuleVector& x) {
    const Ring ring = x.ring();
    return from_table(0, std::move(target), ring, Table{{Word{}, x}});
  }
  static HochschildCochain unit(BimodulePtr target, Ring ring) {
    const ModuleKey one = target->unit();
    return constant(std::move(target), ModuleVector(ring, one));
  }

  // Derivation of k[Z^d] with values D(t_i) = values[i] (A is commutative):
  // D(t^k) = sum_i k_i t^{k - e_i} D(t_i).
  static HochschildCochain derivation(BimodulePtr A, Ring ring, std::vector<ModuleVector> values) {
    const GroupPtr G = A->group();
    if (G->is_finite() || A->kind() != BimoduleKind::Regular || values.size() != static_cast<std::size_t>(G->rank()))
      fail(ErrorCode::UnsupportedBackend, "derivation rule needs A = k[Z^d] and d generator values");
    return HochschildCochain(1, A, ring, Backend::Rule, [G, ring, values](const Word& w) {
      ModuleVector out(ring);
      const GroupElement& g = w[0];
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (g.c[i] == 0) continue;
        GroupElement shifted = g;
        shifted.c[i] -= 1;
        for (const auto& [m, c] : values[i])
          out.add(key_of(G->multiply(shifted, element_of(m))), c * Scalar(ring, g.c[i]));
      }
      return out;
    });
  }

  int arity() const { return arity_; }
  int degree() const { return -arity_; }
  const BimodulePtr& target() const { return target_; }
  const GroupPtr& group() const { return target_->group(); }
  const Ring& ring() const { return ring_; }
  Backend backend() const { return backend_; }
  bool normalized() const { return normalized_; }

  ModuleVector operator()(const Word& w) const {
    if (static_cast<int>(w.size()) != arity_)
      fail(ErrorCode::InvalidSpec, "cochain of arity " + std::to_string(arity_) + " applied to word of length " +
                                       std::to_string(w.size()));
    if (normalized_ && has_unit_letter(*group(), w)) return ModuleVector(ring_);
    return eval_(w);
  }

  // Multilinear extension to letters that are combinations of group elements.
  ModuleVector evaluate(const std::vector<LinearCombination<GroupElement>>& letters) const {
    ModuleVector out(ring_);
    Word w(letters.size());
    std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t i, const Scalar& c) {
      if (i == letters.size()) {
        out.add_scaled((*this)(w), c);
        return;
      }
      for (const auto& [g, a] : letters[i]) {
        w[i] = g;
        rec(i + 1, c * a);
      }
    };
    rec(0, Scalar::one(ring_));
    return out;
  }

  // Returns a copy whose evaluations are cached (pure cache; single evaluation context).
  HochschildCochain memoized() const {
    auto cache = std::make_shared<std::map<Word, ModuleVector>>();
    auto mutex = std::make_shared<std::mutex>();
    auto inner = eval_;
    return HochschildCochain(arity_, target_, ring_, backend_,
                             [cache, mutex, inner](const Word& w) {
                               {
                                 std::lock_guard<std::mutex> lock(*mutex);
                                 auto it = cache->find(w);
                                 if (it != cache->end()) return it->second;
                               }
                               ModuleVector v = inner(w);
                               std::lock_guard<std::mutex> lock(*mutex);
                               cache->emplace(w, v);
                               return v;
                             },
                             normalized_);
  }

 private:
  int arity_;
  BimodulePtr target_;
  Ring ring_;
  Backend backend_;
  Evaluator eval_;
  bool normalized_;
};

// Left and right actions of group elements on module values.
inline ModuleVector act_left(const Bimodule& M, const GroupElement& g, const ModuleVector& v) {
  ModuleVector out(v.ring());
  for (const auto& [m, c] : v) out.add(M.left(g, m), c);
  return out;
}
inline ModuleVector act_right(const Bimodule& M, const ModuleVector& v, const GroupElement& g) {
  ModuleVector out(v.ring());
  for (const auto& [m, c] : v) out.add(M.right(m, g), c);
  return out;
}

// D f = (-1)^{p+1} (a_1 f(a_2..) + sum_i (-1)^i f(..a_i a_{i+1}..) + (-1)^{p+1} f(a_1..a_p) a_{p+1}).
inline HochschildCochain cochain_differential(const HochschildCochain& f) {
  if (f.backend() == HochschildCochain::Backend::Transported)
    fail(ErrorCode::UnsupportedBackend, "differentiate transported cochains on the small model");
  const int p = f.arity();
  const Ring ring = f.ring();
  const BimodulePtr N = f.target();
  const GroupPtr G = f.group();
  return HochschildCochain(
      p + 1, N, ring, HochschildCochain::Backend::Rule,
      [f, p, ring, N, G](const Word& w) {
        ModuleVector out = act_left(*N, w[0], f(Word(w.begin() + 1, w.end())));
        for (int i = 1; i <= p; ++i) {
          Word merged;
          for (int j = 0; j <= p; ++j) {
            if (j == i) continue;
            merged.push_back(j == i - 1 ? G->multiply(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)])
                                        : w[static_cast<std::size_t>(j)]);
          }
          out.add_scaled(f(merged), sign_scalar(ring, i));
        }
        out.add_scaled(act_right(*N, f(Word(w.begin(), w.end() - 1)), w.back()), sign_scalar(ring, p + 1));
        return out.scaled(sign_scalar(ring, p + 1));
      },
      f.normalized());
}

// Words of fixed length over a finite alphabet, indexed in mixed radix.
class WordIndexer {
 public:
  WordIndexer(std::vector<GroupElement> alphabet, const Group& G, std::size_t length)
      : alphabet_(std::move(alphabet)), length_(length) {
    for (std::size_t i = 0; i < alphabet_.size(); ++i) position_[G.index(alphabet_[i])] = i;
    count_ = 1;
    for (std::size_t i = 0; i < length_; ++i) count_ *= alphabet_.size();
  }

  std::size_t count() const { return count_; }
  std::size_t length() const { return length_; }

  std::optional<std::size_t> index(const Word& w, const Group& G) const {
    std::size_t idx = 0;
    for (const auto& g : w) {
      auto it = position_.find(G.index(g));
      if (it == position_.end()) return std::nullopt;
      idx = idx * alphabet_.size() + it->second;
    }
    return idx;
  }
  Word word(std::size_t idx) const {
    Word w(length_);
    for (std::size_t i = length_; i-- > 0;) {
      w[i] = alphabet_[idx % alphabet_.size()];
      idx /= alphabet_.size();
    }
    return w;
  }

 private:
  std::vector<GroupElement> alphabet_;
  std::size_t length_;
  std::size_t count_ = 1;
  std::map<std::size_t, std::size_t> position_;
};

// Coordinates for the (normalized or full) chain and cochain complexes of a finite group.
class FiniteHochschildComplex {
 public:
  FiniteHochschildComplex(BimodulePtr module, Ring ring, bool normalized = true)
      : module_(std::move(module)), ring_(ring), normalized_(normalized) {
    const Group& G = *module_->group();
    if (!G.is_finite()) fail(ErrorCode::InfiniteGroup, "truncated complexes need a finite group; use resolutions for " + G.name());
    alphabet_ = normalized ? G.non_identity_elements() : G.elements();
    module_basis_ = module_->basis();
  }

  const BimodulePtr& module() const { return module_; }
  const Ring& ring() const { return ring_; }
  bool normalized() const { return normalized_; }
  const Group& group() const { return *module_->group(); }

  WordIndexer words(std::size_t n) const { return WordIndexer(alphabet_, group(), n); }
  std::size_t module_dim() const { return module_basis_.size(); }

  // ---- chains: index = module_index * #words + word_index
  std::size_t chain_dim(int n) const { return n < 0 ? 0 : module_dim() * words(static_cast<std::size_t>(n)).count(); }

  SparseVector chain_to_vector(const HochschildChain& c, int n) const {
    const WordIndexer W = words(static_cast<std::size_t>(n));
    SparseVector v(ring_);
    for (const auto& [w, coef] : c.terms()) {
      if (static_cast<int>(w.letters.size()) != n) fail(ErrorCode::InvalidSpec, "chain not homogeneous of degree " + std::to_string(n));
      auto idx = W.index(w.letters, group());
      if (!idx) fail(ErrorCode::InvalidSpec, "chain word outside the normalized basis");
      v.add(module_->index(w.m) * W.count() + *idx, coef);
    }
    return v;
  }
  HochschildChain vector_to_chain(const SparseVector& v, int n) const {
    const WordIndexer W = words(static_cast<std::size_t>(n));
    HochschildChain c(module_, ring_);
    for (const auto& [i, coef] : v) c.add(BarWord{module_basis_[i / W.count()], W.word(i % W.count())}, coef);
    return c;
  }

  // d_n: C_n -> C_{n-1}
  ExactMatrix chain_differential_matrix(int n) const {
    ExactMatrix m(ring_, chain_dim(n - 1), chain_dim(n));
    if (n <= 0) return m;
    for (std::size_t col = 0; col < chain_dim(n); ++col) {
      SparseVector e(ring_);
      e.add(col, Scalar::one(ring_));
      HochschildChain d = chain_differential(vector_to_chain(e, n));
      if (normalized_) d = normalize(d);
      m.set_column(col, chain_to_vector(d, n - 1));
    }
    return m;
  }

  // ---- cochains: index = word_index * dim M + module_index
  std::size_t cochain_dim(int p) const { return p < 0 ? 0 : module_dim() * words(static_cast<std::size_t>(p)).count(); }

  SparseVector cochain_to_vector(const HochschildCochain& f) const {
    const WordIndexer W = words(static_cast<std::size_t>(f.arity()));
    SparseVector v(ring_);
    for (std::size_t wi = 0; wi < W.count(); ++wi)
      for (const auto& [m, c] : f(W.word(wi))) v.add(wi * module_dim() + module_->index(m), c);
    return v;
  }
  HochschildCochain vector_to_cochain(const SparseVector& v, int p) const {
    const WordIndexer W = words(static_cast<std::size_t>(p));
    HochschildCochain::Table table;
    for (const auto& [i, c] : v) {
      auto [it, inserted] = table.try_emplace(W.word(i / module_dim()), ring_);
      it->second.add(module_basis_[i % module_dim()], c);
    }
    return HochschildCochain::from_table(p, module_, ring_, std::move(table), normalized_);
  }

  // D_p: C^p -> C^{p+1}, assembled face by face.
  ExactMatrix cochain_differential_matrix(int p) const {
    ExactMatrix m(ring_, cochain_dim(p + 1), cochain_dim(p));
    if (p < 0) return m;
    const Group& G = group();
    const WordIndexer Wp = words(static_cast<std::size_t>(p));
    const WordIndexer Wq = words(static_cast<std::size_t>(p + 1));
    const Scalar global = sign_scalar(ring_, p + 1);
    const std::size_t dm = module_dim();
    for (std::size_t row_word = 0; row_word < Wq.count(); ++row_word) {
      const Word w = Wq.word(row_word);
      auto add_face = [&](const Word& face, const Scalar& s, auto&& act) {
        auto col_word = Wp.index(face, G);
        if (!col_word) return;  // face has a unit letter: normalized cochains vanish there
        for (std::size_t mi = 0; mi < dm; ++mi) {
          const ModuleKey image = act(module_basis_[mi]);
          m.add(row_word * dm + module_->index(image), *col_word * dm + mi, global * s);
        }
      };
      add_face(Word(w.begin() + 1, w.end()), Scalar::one(ring_), [&](const ModuleKey& k) { return module_->left(w[0], k); });
      for (int i = 1; i <= p; ++i) {
        Word merged;
        for (int j = 0; j <= p; ++j) {
          if (j == i) continue;
          merged.push_back(j == i - 1 ? G.multiply(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)])
                                      : w[static_cast<std::size_t>(j)]);
        }
        add_face(merged, sign_scalar(ring_, i), [](const ModuleKey& k) { return k; });
      }
      add_face(Word(w.begin(), w.end() - 1), sign_scalar(ring_, p + 1),
               [&](const ModuleKey& k) { return module_->right(k, w.back()); });
    }
    return m;
  }

 private:
  BimodulePtr module_;
  Ring ring_;
  bool normalized_;
  std::vector<GroupElement> alphabet_;
  std::vector<ModuleKey> module_basis_;
};

namespace detail {

template <class F>
std::vector<HomologyPresentation> run_degrees(int lo, int hi, unsigned jobs, F&& per_degree) {
  std::vector<HomologyPresentation> out(static_cast<std::size_t>(std::max(0, hi - lo + 1)));
  if (jobs <= 1) {
    for (int n = lo; n <= hi; ++n) out[static_cast<std::size_t>(n - lo)] = per_degree(n);
    return out;
  }
  for (int start = lo; start <= hi; start += static_cast<int>(jobs)) {
    std::vector<std::future<HomologyPresentation>> batch;
    const int stop = std::min(hi, start + static_cast<int>(jobs) - 1);
    for (int n = start; n <= stop; ++n) batch.push_back(std::async(std::launch::async, per_degree, n));
    for (int n = start; n <= stop; ++n) out[static_cast<std::size_t>(n - lo)] = batch[static_cast<std::size_t>(n - start)].get();
  }
  return out;
}

}  // namespace detail

// HH_n(k[G], M) for n in [lo, hi] from the truncated bar complex.
inline std::vector<HomologyPresentation> truncated_homology(const BimodulePtr& M, Ring ring, int lo, int hi,
                                                            bool normalized = true, unsigned jobs = 1) {
  const FiniteHochschildComplex cx(M, ring, normalized);
  return detail::run_degrees(lo, hi, jobs, [&cx, ring](int n) {
    return homology_at(cx.chain_differential_matrix(n + 1), cx.chain_differential_matrix(n), ring, n);
  });
}

// HH^p(k[G], N); homology of the cochain complex in lower degree -p, reported by p.
inline std::vector<HomologyPresentation> truncated_cohomology(const BimodulePtr& N, Ring ring, int lo, int hi,
                                                              bool normalized = true, unsigned jobs = 1) {
  const FiniteHochschildComplex cx(N, ring, normalized);
  return detail::run_degrees(lo, hi, jobs, [&cx, ring](int p) {
    const ExactMatrix incoming = p == 0 ? ExactMatrix(ring, cx.cochain_dim(0), 0) : cx.cochain_differential_matrix(p - 1);
    return homology_at(incoming, cx.cochain_differential_matrix(p), ring, p);
  });
}

}  // namespace hochbv
