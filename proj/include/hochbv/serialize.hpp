#pragma once

#include <json.hpp>

#include "hochbv/hochschild.hpp"

namespace hochbv {

// Canonical JSON for chains and cochains. Terms follow the container order, so equal values
// serialize to identical bytes.

namespace detail {

inline nlohmann::json coords_json(const std::vector<std::int64_t>& c) { return c; }

inline Scalar scalar_from_text(const Ring& ring, const nlohmann::json& j) {
  if (!j.is_string()) fail(ErrorCode::InvalidSpec, "coefficients serialize as strings");
  try {
    mpq_class q(j.get<std::string>());
    q.canonicalize();
    return Scalar(ring, q);
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::InvalidSpec, "bad coefficient " + j.get<std::string>());
  }
}

inline Word word_from_json(const nlohmann::json& j) {
  Word w;
  for (const auto& g : j) w.push_back(GroupElement{g.get<std::vector<std::int64_t>>()});
  return w;
}

inline nlohmann::json word_json(const Word& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : w) out.push_back(coords_json(g.c));
  return out;
}

inline nlohmann::json module_vector_json(const ModuleVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : v) out.push_back({{"m", coords_json(m.c)}, {"coef", c.to_string()}});
  return out;
}

}  // namespace detail

inline nlohmann::json chain_to_json(const HochschildChain& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, coef] : c.terms())
    terms.push_back({{"m", detail::coords_json(w.m.c)}, {"letters", detail::word_json(w.letters)}, {"coef", coef.to_string()}});
  return {{"kind", "chain"}, {"ring", c.ring().to_string()}, {"module", c.module()->name()}, {"terms", terms}};
}

inline HochschildChain chain_from_json(const nlohmann::json& j, const BimodulePtr& M) {
  const Ring ring = Ring::parse(j.at("ring").get<std::string>());
  HochschildChain c(M, ring);
  for (const auto& t : j.at("terms"))
    c.add(BarWord{ModuleKey{t.at("m").get<std::vector<std::int64_t>>()}, detail::word_from_json(t.at("letters"))},
          detail::scalar_from_text(ring, t.at("coef")));
  return c;
}

// Tabulates a cochain on the normalized words of a finite group; zero values are omitted.
inline nlohmann::json cochain_to_json(const HochschildCochain& f) {
  const FiniteHochschildComplex cx(f.target(), f.ring());
  const WordIndexer W = cx.words(static_cast<std::size_t>(f.arity()));
  nlohmann::json values = nlohmann::json::array();
  for (std::size_t i = 0; i < W.count(); ++i) {
    const Word w = W.word(i);
    const ModuleVector v = f(w);
    if (!v.is_zero()) values.push_back({{"letters", detail::word_json(w)}, {"value", detail::module_vector_json(v)}});
  }
  return {{"kind", "cochain"}, {"ring", f.ring().to_string()}, {"module", f.target()->name()}, {"arity", f.arity()},
          {"values", values}};
}

inline HochschildCochain cochain_from_json(const nlohmann::json& j, const BimodulePtr& N) {
  const Ring ring = Ring::parse(j.at("ring").get<std::string>());
  HochschildCochain::Table table;
  for (const auto& e : j.at("values")) {
    ModuleVector v(ring);
    for (const auto& t : e.at("value"))
      v.add(ModuleKey{t.at("m").get<std::vector<std::int64_t>>()}, detail::scalar_from_text(ring, t.at("coef")));
    table[detail::word_from_json(e.at("letters"))] = v;
  }
  return HochschildCochain::from_table(j.at("arity").get<int>(), N, ring, std::move(table));
}

}  // namespace hochbv
