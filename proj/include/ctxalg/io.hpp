#pragma once

#include <fstream>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ctxalg/degree.hpp"
#include "ctxalg/diag_operator.hpp"
#include "ctxalg/error.hpp"
#include "ctxalg/language.hpp"
#include "ctxalg/parse.hpp"
#include "ctxalg/semantics.hpp"
#include "ctxalg/strings.hpp"
#include "ctxalg/universe.hpp"

namespace ctxalg {

using Json = nlohmann::json;

namespace detail {

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InputError("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

inline const Json& field(const Json& j, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError("missing field '" + key + "'");
  return *it;
}

inline std::vector<std::string> string_list(const Json& j, const std::string& key) {
  const Json& arr = field(j, key);
  if (!arr.is_array()) throw InputError("field '" + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : arr) {
    if (!item.is_string()) throw InputError("field '" + key + "' must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

inline Formula parse_formula_field(const std::string& text, const std::string& where) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    throw InputError("bad formula '" + text + "' in " + where + ": " + e.what());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Universe: {"atoms": ["p", "q"], "formulas": ["true", "false", "p & q"]}
// ---------------------------------------------------------------------------

inline UniversePtr universe_from_json(const Json& j, UniverseOptions options = {}) {
  std::vector<std::string> atoms = detail::string_list(j, "atoms");
  std::vector<Formula> formulas;
  for (const auto& text : detail::string_list(j, "formulas"))
    formulas.push_back(detail::parse_formula_field(text, "universe"));
  return Universe::make(std::move(formulas), std::move(atoms), options);
}

inline UniversePtr load_universe(const std::string& path, UniverseOptions options = {}) {
  return universe_from_json(detail::read_json_file(path), options);
}

inline Json universe_to_json(const Universe& universe) {
  Json j;
  j["atoms"] = universe.atoms();
  Json formulas = Json::array();
  for (const auto& f : universe.formulas()) formulas.push_back(to_string(f));
  j["formulas"] = std::move(formulas);
  return j;
}

// ---------------------------------------------------------------------------
// Scalar language: {"alphabet": ["a", "b"], "entries": {"a b": 1.0, "": 0.5}}
// Strings are space-separated symbol lists; "" is the empty string.
// ---------------------------------------------------------------------------

inline LanguagePtr<ScalarSpace> scalar_language_from_json(const Json& j) {
  AlphabetPtr alphabet = make_alphabet(detail::string_list(j, "alphabet"));
  const Json& entries = detail::field(j, "entries");
  if (!entries.is_object()) throw InputError("field 'entries' must be an object");
  std::map<Str, double> values;
  for (const auto& [key, value] : entries.items()) {
    if (!value.is_number()) throw InputError("entry '" + key + "' must be a number");
    Str s = parse_str(key);
    if (!values.emplace(std::move(s), value.get<double>()).second)
      throw InputError("duplicate language entry '" + key + "'");
  }
  return make_language(ScalarSpace{}, std::move(alphabet), std::move(values));
}

inline LanguagePtr<ScalarSpace> load_scalar_language(const std::string& path) {
  return scalar_language_from_json(detail::read_json_file(path));
}

// ---------------------------------------------------------------------------
// Lexicon: {"words": {"bank": {"s_fin": 0.6, "s_riv": 0.4}}}
// ---------------------------------------------------------------------------

inline Lexicon lexicon_from_json(const Json& j) {
  const Json& words = detail::field(j, "words");
  if (!words.is_object()) throw InputError("field 'words' must be an object");
  std::map<std::string, std::map<std::string, double>> out;
  for (const auto& [word, weights] : words.items()) {
    if (!weights.is_object())
      throw InputError("weights of word '" + word + "' must be an object");
    std::map<std::string, double> w;
    for (const auto& [aspect, value] : weights.items()) {
      if (!value.is_number())
        throw InputError("weight of aspect '" + aspect + "' must be a number");
      w.emplace(aspect, value.get<double>());
    }
    out.emplace(word, std::move(w));
  }
  return Lexicon(std::move(out));
}

inline Lexicon load_lexicon(const std::string& path) {
  return lexicon_from_json(detail::read_json_file(path));
}

// ---------------------------------------------------------------------------
// Interpretation: {"aspects": ["s1", "s2"], "delta": {"s1 s2": "p & q"}}
// ---------------------------------------------------------------------------

inline Interpretation interpretation_from_json(const Json& j, UniversePtr universe) {
  AlphabetPtr aspects = make_alphabet(detail::string_list(j, "aspects"));
  const Json& delta = detail::field(j, "delta");
  if (!delta.is_object()) throw InputError("field 'delta' must be an object");
  std::map<Str, Formula> table;
  for (const auto& [key, value] : delta.items()) {
    if (!value.is_string()) throw InputError("delta entry '" + key + "' must be a formula string");
    Formula f = detail::parse_formula_field(value.get<std::string>(), "delta");
    if (!table.emplace(parse_str(key), std::move(f)).second)
      throw InputError("duplicate delta entry '" + key + "'");
  }
  return Interpretation(std::move(aspects), std::move(table), std::move(universe));
}

inline Interpretation load_interpretation(const std::string& path, UniversePtr universe) {
  return interpretation_from_json(detail::read_json_file(path), std::move(universe));
}

// ---------------------------------------------------------------------------
// Gamma: {"sentences": {"<bos> the cat sleeps <eos>": "p"},
//         "boundaries": ["<bos>", "<eos>"]}    (boundaries optional)
// ---------------------------------------------------------------------------

inline GammaSpec gamma_from_json(const Json& j) {
  const Json& sentences = detail::field(j, "sentences");
  if (!sentences.is_object()) throw InputError("field 'sentences' must be an object");
  GammaSpec out;
  for (const auto& [key, value] : sentences.items()) {
    if (!value.is_string())
      throw InputError("sentence '" + key + "' must map to a formula string");
    Formula f = detail::parse_formula_field(value.get<std::string>(), "gamma");
    if (!out.sentences.emplace(parse_str(key), std::move(f)).second)
      throw InputError("duplicate sentence '" + key + "'");
  }
  if (j.contains("boundaries")) {
    auto pair = detail::string_list(j, "boundaries");
    if (pair.size() != 2) throw InputError("field 'boundaries' must hold exactly two symbols");
    out.boundaries = {pair[0], pair[1]};
  }
  return out;
}

inline GammaSpec load_gamma(const std::string& path) {
  return gamma_from_json(detail::read_json_file(path));
}

// ---------------------------------------------------------------------------
// Distribution: {"probs": {"p & q": 0.1}}. Keys are parsed and matched to
// members by tree identity; members left unlisted share the residual mass
// uniformly.
// ---------------------------------------------------------------------------

inline Distribution distribution_from_json(const Json& j, const UniversePtr& universe) {
  const Json& probs = detail::field(j, "probs");
  if (!probs.is_object()) throw InputError("field 'probs' must be an object");
  std::vector<double> out(universe->size(), -1.0);
  double listed_mass = 0.0;
  std::size_t listed = 0;
  for (const auto& [key, value] : probs.items()) {
    if (!value.is_number()) throw InputError("probability of '" + key + "' must be a number");
    Formula f = detail::parse_formula_field(key, "distribution");
    auto index = universe->index_of(f);
    if (!index) throw InputError("'" + key + "' is not a member of the universe");
    if (out[*index] >= 0.0) throw InputError("duplicate probability for '" + key + "'");
    const double p = value.get<double>();
    if (p < 0.0) throw InputError("probability of '" + key + "' is negative");
    out[*index] = p;
    listed_mass += p;
    ++listed;
  }
  if (listed_mass > 1.0 + 1e-9)
    throw InputError("listed probabilities sum to " + std::to_string(listed_mass) +
                     ", more than 1");
  const std::size_t unlisted = universe->size() - listed;
  if (unlisted == 0) {
    if (std::abs(listed_mass - 1.0) > 1e-9)
      throw InputError("probabilities sum to " + std::to_string(listed_mass) + ", expected 1");
  } else {
    const double residual = std::max(0.0, 1.0 - listed_mass) / double(unlisted);
    for (auto& p : out)
      if (p < 0.0) p = residual;
  }
  return Distribution(universe, std::move(out));
}

inline Distribution load_distribution(const std::string& path, const UniversePtr& universe) {
  return distribution_from_json(detail::read_json_file(path), universe);
}

// ---------------------------------------------------------------------------
// Serialization of results
// ---------------------------------------------------------------------------

inline Json operator_to_json(const DiagOperator& op) {
  Json j;
  j["universe_hash"] = op.universe()->hash_hex();
  j["diag"] = op.diag();
  return j;
}

inline DiagOperator operator_from_json(const Json& j, const UniversePtr& universe) {
  const std::string hash = detail::field(j, "universe_hash").get<std::string>();
  if (hash != universe->hash_hex())
    throw InputError("operator was serialized over universe " + hash +
                     ", not " + universe->hash_hex());
  return DiagOperator(universe, detail::field(j, "diag").get<std::vector<double>>());
}

inline Json identity_report_to_json(const IdentityReport& report) {
  Json j;
  j["conj_exact"] = report.conj_exact;
  j["top_exact"] = report.top_exact;
  Json neg = Json::object();
  for (const auto& [u, defects] : report.neg_defects) neg[u] = defects;
  j["neg_defects"] = std::move(neg);
  Json disj = Json::array();
  for (const auto& [pair, defects] : report.disj_defects) {
    Json item;
    item["u"] = pair.first;
    item["v"] = pair.second;
    item["defects"] = defects;
    disj.push_back(std::move(item));
  }
  j["disj_defects"] = std::move(disj);
  return j;
}

inline Json degree_result_to_json(const DegreeResult& result) {
  Json j;
  j["degree"] = result.degree;
  j["numerator"] = result.numerator;
  j["denominator"] = result.denominator;
  j["mode"] = to_string(result.mode);
  if (result.samples) j["samples"] = *result.samples;
  if (result.seed) j["seed"] = *result.seed;
  if (result.mode == DegreeMode::MonteCarlo)
    j["stderr"] = result.stderr_estimate ? Json(*result.stderr_estimate) : Json(nullptr);
  if (!result.warnings.empty()) j["warnings"] = result.warnings;
  return j;
}

// Pairs file for identity checking: {"pairs": [["p", "q"], ["p | q", "r"]]}
inline std::vector<std::pair<Formula, Formula>> pairs_from_json(const Json& j) {
  const Json& arr = detail::field(j, "pairs");
  if (!arr.is_array()) throw InputError("field 'pairs' must be an array");
  std::vector<std::pair<Formula, Formula>> out;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
      throw InputError("each pair must be a two-element array of formula strings");
    out.emplace_back(detail::parse_formula_field(item[0].get<std::string>(), "pairs"),
                     detail::parse_formula_field(item[1].get<std::string>(), "pairs"));
  }
  return out;
}

inline std::vector<std::pair<Formula, Formula>> load_pairs(const std::string& path) {
  return pairs_from_json(detail::read_json_file(path));
}

}  // namespace ctxalg
