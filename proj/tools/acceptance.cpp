#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hochbv/commands.hpp"
#include "hochbv/hochschild_algebra.hpp"

using namespace hochbv;

namespace {

const Ring Q = Ring::rationals();
const Ring F2 = Ring::prime_field(2);
const Ring F3 = Ring::prime_field(3);
const Ring F5 = Ring::prime_field(5);

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

std::vector<GradedAlgebraSpec> corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(std::filesystem::path(HOCHBV_DATA_DIR) / "specs"))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<GradedAlgebraSpec> out;
  for (const auto& f : files) out.push_back(GradedAlgebraSpec::from_json(read_json_file(f.string())));
  return out;
}

bool matrix_is_zero(const ExactMatrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m.column(c).is_zero()) return false;
  return true;
}

Outcome differential_sanity() {
  Outcome o;
  std::size_t chains = 0;
  const std::vector<std::tuple<GroupPtr, Ring, int>> cases{{Group::cyclic(2), F2, 5}, {Group::cyclic(3), F3, 4},
                                                         {Group::cyclic(4), F2, 4}, {Group::symmetric3(), F3, 4}};
  for (const auto& [G, ring, len] : cases) {
    const FiniteHochschildComplex cx(Bimodule::regular(G), ring);
    for (int n = 2; n <= len; ++n)
      o.require(matrix_is_zero(cx.chain_differential_matrix(n - 1) * cx.chain_differential_matrix(n)), G->name() + " d^2");
    for (int p = 0; p + 2 <= len; ++p)
      o.require(matrix_is_zero(cx.cochain_differential_matrix(p + 1) * cx.cochain_differential_matrix(p)), G->name() + " D^2");
    for (int n = 0; n <= len; ++n)
      for (std::size_t i = 0; i < cx.chain_dim(n); ++i) {
        SparseVector e(ring);
        e.add(i, Scalar::one(ring));
        const HochschildChain c = cx.vector_to_chain(e, n);
        const HochschildChain Bc = connes_B(c);
        ++chains;
        o.require(connes_B(Bc).is_zero(), G->name() + " B^2");
        o.require((normalized_differential(Bc) + connes_B(normalized_differential(c))).is_zero(), G->name() + " bB+Bb");
      }
  }
  if (o.ok) o.note = std::to_string(chains) + " basis chains";
  return o;
}

Outcome two_oracles() {
  Outcome o;
  for (const auto& [n, ring] : {std::pair{2, F2}, std::pair{3, F3}}) {
    const PeriodicResolution P(n, ring, 6);
    const auto small = small_model_homology(P, Bimodule::regular(P.group()), true, 0, 5);
    const auto bar = truncated_homology(Bimodule::regular(Group::cyclic(n)), ring, 0, 5);
    for (int k = 0; k <= 5; ++k) {
      o.require(small[static_cast<std::size_t>(k)].free_rank == bar[static_cast<std::size_t>(k)].free_rank,
                "Z/" + std::to_string(n) + " degree " + std::to_string(k));
      o.require(bar[static_cast<std::size_t>(k)].free_rank == static_cast<std::size_t>(n), "expected dimension");
    }
  }
  return o;
}

const std::vector<std::pair<GroupPtr, Ring>>& surfaces() {
  static const std::vector<std::pair<GroupPtr, Ring>> s{
      {Group::cyclic(2), F2}, {Group::cyclic(3), F3}, {Group::symmetric3(), F3}};
  return s;
}

void require_rows(Outcome& o, const std::vector<ComparisonRow>& rows) {
  for (const auto& r : rows) o.require(r.ok, r.check + " " + r.group + " " + r.module + " degree " + std::to_string(r.degree));
}

Outcome comparison_diagrams() {
  Outcome o;
  for (const auto& [G, ring] : surfaces()) {
    const BimodulePtr A = Bimodule::regular(G), k = Bimodule::trivial(G);
    for (const auto& [M, N] : {std::pair{A, A}, std::pair{A, k}, std::pair{k, A}, std::pair{k, k}}) {
      require_rows(o, check_cap_diagram(M, N, ring, 2));
      require_rows(o, check_cup_diagram(M, N, ring, 2));
    }
    for (const auto& N : {k, A}) require_rows(o, check_section_cap(N, ring, 2));
  }
  return o;
}

Outcome section_properties() {
  Outcome o;
  for (const auto& [G, ring] : surfaces()) require_rows(o, check_section_properties(G, ring, 2));
  return o;
}

Outcome bv_equivalences() {
  Outcome o;
  const auto specs = corpus();
  std::size_t negatives = 0, positives = 0;
  o.require(specs.size() >= 20, "corpus has fewer than 20 specs");
  for (const auto& s : specs) {
    const BVEquivalence e = bv_equivalence(s);
    o.require(e.consistent(), s.name + " characterizations disagree");
    o.require(s.expect_bv.has_value() && *s.expect_bv == e.second_order, s.name + " unexpected verdict");
    (e.second_order ? positives : negatives)++;
  }
  o.require(negatives >= 5, "fewer than 5 negative controls");
  o.require(positives >= 10, "fewer than 10 positives");
  o.note = o.ok ? std::to_string(specs.size()) + " specs, " + std::to_string(negatives) + " negative" : o.note;
  return o;
}

Outcome duality_rank(int d, const std::vector<Ring>& rings, int K) {
  Outcome o;
  for (const Ring& ring : rings) {
    const ZdDuality Z(d, ring);
    if (d == 2) o.require(Z.rank(0) == 1 && Z.rank(1) == 2 && Z.rank(2) == 1, "rank pattern");
    o.require(Z.delta(Z.monomial(0, 0, Z.group()->identity())).is_zero(), "Delta(1) != 0");
    const DualityReport r = check_bv_on_hh(Z, default_bv_options(d, K));
    for (const auto& c : r.checks) o.require(c.ok, ring.to_string() + " " + c.name);
  }
  return o;
}

Outcome calabi_yau() {
  Outcome o;
  const DualityReport r = calabi_yau_check(1, Q);
  for (const auto& c : r.checks) o.require(c.ok, c.name);
  return o;
}

Outcome derived_brackets() {
  Outcome o;
  // End(F_2^3) with a square-zero B
  {
    Endo B{1, OperatorColumns(3, Vec(3, Scalar::zero(F2)))};
    B.columns[1][2] = Scalar::one(F2);
    const EndomorphismAlgebra E(F2, {-1, 0, 1}, B);
    const auto [s, t] = E.as_spec();
    o.require(check_loday_gerstenhaber(s, t).passed(), "End(F2^3) bracket");
  }
  {
    const FiniteHH hh(Bimodule::regular(Group::cyclic(2)), F2, 3);
    const HochschildEndomorphisms H(hh, 3);
    const EndomorphismAlgebra E(F2, H.degrees(), H.B());
    o.require(E.check_loday_gerstenhaber(H.actions(), H.labels()).passed(), "End(HH_*) image");
  }
  const auto specs = corpus();
  for (const auto& s : specs) {
    if (!s.delta) continue;
    try {
      const BilinearTable vb = variant_lie_bracket(s, *s.delta);
      o.require(check_lie(s, vb).passed(), s.name + " variant bracket");
      o.require(check_loday_gerstenhaber(s, derived_bracket(s, *s.delta)).passed(), s.name + " derived bracket");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotADerivation) throw;
    }
    if (s.expect_bv && *s.expect_bv)
      o.require(check_left_multiplication_embedding(s, bv_bracket_from_delta(s)).passed(), s.name + " embedding");
  }
  const auto w = search_variant_poisson_failure();
  o.require(w.has_value(), "no Poisson counterexample found");
  if (w) {
    const BilinearTable vb = variant_lie_bracket(w->spec, w->d);
    o.require(check_lie(w->spec, vb).passed() && !check_poisson_only(w->spec, vb).passed(), "counterexample");
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::filesystem::path data(HOCHBV_DATA_DIR);
  auto cfg = [&](std::string command, const std::string& group, const std::string& spec, std::string ring, int maxd, int K) {
    RunConfig c;
    c.command = std::move(command);
    if (!group.empty()) c.group = read_json_file((data / "groups" / group).string());
    if (!spec.empty()) c.spec = read_json_file((data / "specs" / spec).string());
    c.ring = std::move(ring);
    c.max_degree = maxd;
    c.trunc_k = K;
    return c;
  };
  const std::vector<RunConfig> runs{cfg("compute", "z2.json", "", "f2", 5, 3), cfg("compute", "free_abelian_1.json", "", "q", 3, 3),
                                    cfg("bv", "free_abelian_1.json", "", "q", 3, 3), cfg("axioms", "", "trunc_f3.json", "q", 3, 3),
                                    cfg("axioms", "", "trunc_f3_mutated.json", "q", 3, 3),
                                    cfg("compare-group", "z2.json", "", "f2", 2, 3), cfg("cy-check", "free_abelian_1.json", "", "q", 3, 3)};
  for (RunConfig c : runs) {
    const std::string a = run_command(c).report.dump();
    c.jobs = 2;
    const std::string b = run_command(c).report.dump();
    o.require(a == b, c.command + " output differs between runs");
  }
  for (int d : {1, 2}) {
    BVCheckOptions opt = default_bv_options(d, 2);
    opt.compare_psi_variants = true;
    const DualityReport r = check_bv_on_hh(ZdDuality(d, Q), opt);
    o.require(r.check("psi-independence").ok, "psi variants differ for d = " + std::to_string(d));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "differential sanity", 60, differential_sanity},
      {2, "two-oracle Hochschild homology", 120, two_oracles},
      {3, "comparison diagrams", 300, comparison_diagrams},
      {4, "section properties", 300, section_properties},
      {5, "BV equivalences on the spec corpus", 60, bv_equivalences},
      {6, "BV structure for Z, K = 3", 120, [] { return duality_rank(1, {Q}, 3); }},
      {7, "BV structure for Z^2, K = 2 over Q and F5", 600, [] { return duality_rank(2, {Q, F5}, 2); }},
      {8, "Calabi-Yau conditions for k[Z]", 60, calabi_yau},
      {9, "derived brackets and End embeddings", 60, derived_brackets},
      {10, "determinism and section independence", 600, determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) o.require(false, "over time budget");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << timing << ")";
    if (!o.note.empty()) std::cout << ": " << o.note;
    std::cout << std::endl;
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
