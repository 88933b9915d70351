#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hochbv/bv_axioms.hpp"
#include "hochbv/duality_bv.hpp"
#include "hochbv/group_comparison.hpp"
#include "hochbv/hochschild.hpp"
#include "hochbv/resolutions.hpp"

namespace hochbv {

inline constexpr const char* kVersion = "0.1.0";

enum class ExitCode : int { Ok = 0, CheckFailed = 1, BadInput = 2, Unsupported = 3, TheoremViolation = 4 };

inline const char* exit_name(ExitCode c) {
  switch (c) {
    case ExitCode::Ok: return "ok";
    case ExitCode::CheckFailed: return "check-failed";
    case ExitCode::BadInput: return "bad-input";
    case ExitCode::Unsupported: return "unsupported";
    case ExitCode::TheoremViolation: return "theorem-violation";
  }
  return "?";
}

inline ExitCode exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedRank:
    case ErrorCode::InfiniteGroup:
    case ErrorCode::UnsupportedBackend:
    case ErrorCode::UnsupportedModule:
    case ErrorCode::NotFiniteDimensional: return ExitCode::Unsupported;
    case ErrorCode::NotInvertible:
    case ErrorCode::CompositionNotZero: return ExitCode::TheoremViolation;
    default: return ExitCode::BadInput;
  }
}

struct RunConfig {
  std::string command;
  nlohmann::json group;  // parsed group file
  nlohmann::json spec;   // parsed graded spec file
  std::string ring = "q";
  int max_degree = 3;
  int trunc_k = 3;
  unsigned jobs = 1;
  bool allow_slow = false;

  // Inputs that determine the report; jobs and output location do not.
  nlohmann::json canonical() const {
    nlohmann::json j{{"command", command}, {"ring", ring}, {"max_degree", max_degree}, {"trunc_k", trunc_k},
                     {"allow_slow", allow_slow}};
    if (!group.is_null()) j["group"] = group;
    if (!spec.is_null()) j["spec"] = spec;
    return j;
  }
};

// FNV-1a over the canonical dump.
inline std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string config_hash(const RunConfig& cfg) { return fnv1a_hex(cfg.canonical().dump()); }

struct CommandResult {
  ExitCode code = ExitCode::Ok;
  nlohmann::json report;
};

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidSpec, "cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidSpec, path + ": " + e.what());
  }
}

namespace detail {

inline nlohmann::json presentation_json(const HomologyPresentation& h) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& t : h.torsion) torsion.push_back(t.get_str());
  return {{"degree", h.degree}, {"rank", h.free_rank}, {"torsion", torsion}};
}

inline bool is_cyclic(const Group& G) {
  if (!G.is_finite()) return false;
  for (const auto& g : G.elements()) {
    std::size_t k = 1;
    while (!G.is_identity(G.power(g, static_cast<std::int64_t>(k)))) ++k;
    if (k == G.order()) return true;
  }
  return false;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline GroupPtr require_group(const RunConfig& cfg) {
  if (cfg.group.is_null()) fail(ErrorCode::InvalidSpec, "--group is required");
  return Group::from_json(cfg.group);
}

inline Ring require_field(const RunConfig& cfg) {
  const Ring ring = Ring::parse(cfg.ring);
  if (!ring.is_field()) fail(ErrorCode::UnsupportedBackend, "this command needs a field, got " + cfg.ring);
  return ring;
}

inline void require_range(const RunConfig& cfg) {
  if (cfg.max_degree < 0 || cfg.max_degree > 12) fail(ErrorCode::InvalidSpec, "--max-degree must lie in [0, 12]");
  if (cfg.trunc_k < 1 || cfg.trunc_k > 20) fail(ErrorCode::InvalidSpec, "--trunc-k must lie in [1, 20]");
}

}  // namespace detail

// HH_* and HH^* of k[G] with coefficients in k[G].
inline CommandResult cmd_compute(const RunConfig& cfg) {
  detail::require_range(cfg);
  const GroupPtr G = detail::require_group(cfg);
  const Ring ring = Ring::parse(cfg.ring);
  CommandResult out;
  nlohmann::json& r = out.report;
  r["group"] = G->name();
  if (!G->is_finite()) {
    const int d = G->rank();
    const KoszulResolution P(d, ring);
    const BimodulePtr A = Bimodule::regular(P.group());
    const bool flat = hochschild_via_resolution(P, A, true).differentials_vanish &&
                      hochschild_via_resolution(P, A, false).differentials_vanish;
    if (!flat) out.code = ExitCode::TheoremViolation;
    nlohmann::json hom = nlohmann::json::array(), coh = nlohmann::json::array();
    for (int n = 0; n <= cfg.max_degree; ++n) {
      const std::uint64_t k = detail::binomial(d, n);
      const std::string text = "free rank " + std::to_string(k) + " over A";
      hom.push_back({{"degree", n}, {"free_rank_over_A", k}, {"description", text}});
      coh.push_back({{"degree", n}, {"free_rank_over_A", k}, {"description", text}});
    }
    r["model"] = "koszul";
    r["small_model_differentials_vanish"] = flat;
    r["homology"] = hom;
    r["cohomology"] = coh;
    return out;
  }
  const BimodulePtr A = Bimodule::regular(G);
  const auto hom = truncated_homology(A, ring, 0, cfg.max_degree, true, cfg.jobs);
  const auto coh = truncated_cohomology(A, ring, 0, cfg.max_degree, true, cfg.jobs);
  nlohmann::json hj = nlohmann::json::array(), cj = nlohmann::json::array(), dims = nlohmann::json::array();
  for (const auto& h : hom) {
    hj.push_back(detail::presentation_json(h));
    dims.push_back(h.free_rank);
  }
  for (const auto& h : coh) cj.push_back(detail::presentation_json(h));
  r["model"] = "bar";
  r["homology"] = hj;
  r["cohomology"] = cj;
  r["dimensions"] = dims;
  if (detail::is_cyclic(*G) && G->order() >= 2) {
    const PeriodicResolution P(static_cast<int>(G->order()), ring, cfg.max_degree + 1);
    const auto small = small_model_homology(P, Bimodule::regular(P.group()), true, 0, cfg.max_degree);
    nlohmann::json pd = nlohmann::json::array();
    bool agree = true;
    for (std::size_t n = 0; n < small.size(); ++n) {
      pd.push_back(small[n].free_rank);
      agree = agree && small[n].free_rank == hom[n].free_rank && small[n].torsion == hom[n].torsion;
    }
    r["periodic_dimensions"] = pd;
    r["oracles_agree"] = agree;
    if (!agree) out.code = ExitCode::CheckFailed;
  }
  return out;
}

// Duality matrices, Delta tables and the BV checks for Z^d.
inline CommandResult cmd_bv(const RunConfig& cfg) {
  detail::require_range(cfg);
  const GroupPtr G = detail::require_group(cfg);
  if (G->is_finite()) fail(ErrorCode::UnsupportedRank, "bv needs a free abelian group");
  const ZdDuality Z(G->rank(), Ring::parse(cfg.ring), SectionSide::Right, cfg.allow_slow);
  const DualityReport rep = check_bv_on_hh(Z, default_bv_options(G->rank(), cfg.trunc_k));
  CommandResult out{ExitCode::Ok, rep.to_json()};
  for (const auto& c : rep.checks) {
    if (c.ok) continue;
    const bool stopping = c.name == "fundamental-cycle" || c.name == "connes-B-of-c" || c.name.rfind("duality-invertible", 0) == 0;
    out.code = stopping ? ExitCode::TheoremViolation : std::max(out.code, ExitCode::CheckFailed);
  }
  return out;
}

// The three BV characterizations on a graded spec, plus the spec's own bracket if given.
inline CommandResult cmd_axioms(const RunConfig& cfg) {
  if (cfg.spec.is_null()) fail(ErrorCode::InvalidSpec, "--spec is required");
  const GradedAlgebraSpec s = [&] {
    try {
      return GradedAlgebraSpec::from_json(cfg.spec);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::InvalidSpec, e.what());
    }
  }();
  CommandResult out;
  nlohmann::json& r = out.report;
  r["spec"] = s.name;
  nlohmann::json checks = nlohmann::json::array();
  if (s.delta) {
    const BilinearTable t = bv_bracket_from_delta(s);
    const AxiomReport so = check_second_order(s), ge = check_gerstenhaber(s, t),
                      de = check_derived_bracket_characterization(s, t);
    for (const auto* a : {&so, &ge, &de}) checks.push_back(a->to_json());
    const BVEquivalence e{s.name, so.passed(), ge.passed(), de.passed()};
    r["equivalence"] = e.to_json();
    if (!e.consistent()) out.code = ExitCode::TheoremViolation;
    else if (!e.second_order) out.code = ExitCode::CheckFailed;
  }
  if (s.bracket) {
    const AxiomReport own = check_gerstenhaber(s);
    checks.push_back(own.to_json());
    if (!own.passed()) out.code = std::max(out.code, ExitCode::CheckFailed);
  }
  if (!s.delta && !s.bracket) fail(ErrorCode::MissingBracket, s.name + ": spec has neither delta nor bracket");
  r["checks"] = checks;
  return out;
}

// Group versus Hochschild cap and cup squares, the section cap square and the section properties.
inline CommandResult cmd_compare_group(const RunConfig& cfg) {
  detail::require_range(cfg);
  const GroupPtr G = detail::require_group(cfg);
  if (!G->is_finite()) fail(ErrorCode::InfiniteGroup, "compare-group needs a finite group");
  const Ring ring = detail::require_field(cfg);
  const BimodulePtr A = Bimodule::regular(G), k = Bimodule::trivial(G);
  std::vector<ComparisonRow> rows;
  auto append = [&](const std::vector<ComparisonRow>& more) { rows.insert(rows.end(), more.begin(), more.end()); };
  for (const auto& [M, N] : {std::pair{A, A}, std::pair{A, k}, std::pair{k, A}, std::pair{k, k}}) {
    append(check_cap_diagram(M, N, ring, cfg.max_degree));
    append(check_cup_diagram(M, N, ring, cfg.max_degree));
  }
  for (const auto& N : {k, A}) append(check_section_cap(N, ring, cfg.max_degree));
  append(check_section_properties(G, ring, cfg.max_degree));
  CommandResult out;
  nlohmann::json rj = nlohmann::json::array();
  for (const auto& row : rows) {
    rj.push_back(row.to_json());
    if (!row.ok) out.code = ExitCode::CheckFailed;
  }
  out.report = {{"group", G->name()}, {"rows", rj}};
  return out;
}

// Calabi-Yau conditions for k[Z] on the exponent window |i|, |j| <= trunc-k.
inline CommandResult cmd_cy_check(const RunConfig& cfg) {
  detail::require_range(cfg);
  const GroupPtr G = detail::require_group(cfg);
  if (G->is_finite()) fail(ErrorCode::UnsupportedRank, "cy-check needs a free abelian group");
  const DualityReport rep = calabi_yau_check(G->rank(), detail::require_field(cfg), cfg.trunc_k);
  return CommandResult{rep.passed() ? ExitCode::Ok : ExitCode::CheckFailed, rep.to_json()};
}

// Runs a command and wraps its result in the report envelope. Errors become reports too.
inline CommandResult run_command(const RunConfig& cfg) {
  CommandResult res;
  try {
    if (cfg.command == "compute") res = cmd_compute(cfg);
    else if (cfg.command == "bv") res = cmd_bv(cfg);
    else if (cfg.command == "axioms") res = cmd_axioms(cfg);
    else if (cfg.command == "compare-group") res = cmd_compare_group(cfg);
    else if (cfg.command == "cy-check") res = cmd_cy_check(cfg);
    else fail(ErrorCode::InvalidSpec, "unknown command " + cfg.command);
  } catch (const Error& e) {
    res.code = exit_for(e.code());
    res.report = {{"error", {{"code", error_name(e.code())}, {"message", e.what()}}}};
  }
  nlohmann::json env{{"tool", "hh"}, {"version", kVersion}, {"command", cfg.command}, {"config", cfg.canonical()},
                     {"config_hash", config_hash(cfg)}, {"status", exit_name(res.code)}, {"result", res.report}};
  res.report = std::move(env);
  return res;
}

// Plain-text rendering of a report envelope.
inline std::string render(const nlohmann::json& env) {
  std::ostringstream os;
  os << "hh " << env.at("command").get<std::string>() << "  status " << env.at("status").get<std::string>()
     << "  config " << env.at("config_hash").get<std::string>() << "\n";
  const nlohmann::json& r = env.at("result");
  if (r.contains("error")) os << "error: " << r["error"]["message"].get<std::string>() << "\n";
  for (const char* key : {"homology", "cohomology"})
    if (r.contains(key)) {
      os << key << ":\n";
      for (const auto& h : r[key]) {
        os << "  " << h["degree"] << "  ";
        if (h.contains("description")) os << h["description"].get<std::string>();
        else os << "rank " << h["rank"] << (h["torsion"].empty() ? "" : " torsion " + h["torsion"].dump());
        os << "\n";
      }
    }
  if (r.contains("oracles_agree")) os << "periodic resolution agrees: " << r["oracles_agree"] << "\n";
  for (const char* key : {"checks", "rows"})
    if (r.contains(key))
      for (const auto& c : r[key]) {
        std::string status = c.value("status", "");
        for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        const std::string name = c.contains("name") ? c["name"].get<std::string>() : c.value("check", "");
        os << "  " << status << "  " << name;
        if (c.contains("degree")) os << " (" << c["module"].get<std::string>() << ", degree " << c["degree"] << ")";
        if (status == "FAIL") {
          if (c.contains("violations") && !c["violations"].empty()) os << "  " << c["violations"][0].dump();
          else if (c.contains("witness")) os << "  " << c["witness"].dump();
        }
        os << "\n";
      }
  if (r.contains("delta_tables"))
    for (const auto& [k, v] : r["delta_tables"].items()) os << "  Delta(" << k << ") = " << v.get<std::string>() << "\n";
  return os.str();
}

}  // namespace hochbv
