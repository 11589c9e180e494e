// ctxalg: batch front-end for context-algebra computations.
//
// Subcommands: check, entail, algebra, compose, degree, gamma.
// Output is JSON by default (--format text for a human-oriented view).
// Exit codes: 0 success, 2 input or parse error, 3 domain error,
// 4 violation of an internal consistency check.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctxalg/ctxalg.hpp"

namespace {

using namespace ctxalg;

enum class LogLevel { Quiet = 0, Warn = 1, Info = 2, Debug = 3 };

LogLevel log_level() {
  const char* env = std::getenv("CONTEXTALG_LOG");
  if (!env) return LogLevel::Warn;
  const std::string value(env);
  if (value == "quiet") return LogLevel::Quiet;
  if (value == "info") return LogLevel::Info;
  if (value == "debug") return LogLevel::Debug;
  return LogLevel::Warn;
}

void log_warn(const std::string& message) {
  if (log_level() >= LogLevel::Warn) std::cerr << "warning: " << message << "\n";
}

void log_info(const std::string& message) {
  if (log_level() >= LogLevel::Info) std::cerr << "info: " << message << "\n";
}

struct Options {
  std::string universe_file;
  std::string lexicon_file;
  std::string interp_file;
  std::string dist_file;
  std::string language_file;
  std::string gamma_file;
  std::string pairs_file;
  std::string mode = "exact";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  double tol = kPivotRelTol;
  std::string format = "json";
};

void emit(const Json& j, const Options& options, const std::string& text) {
  if (options.format == "text")
    std::cout << text;
  else
    std::cout << j.dump(2) << "\n";
}

std::vector<std::string> split_words(const std::string& sentence) {
  std::vector<std::string> out;
  for (auto& s : parse_str(sentence)) out.push_back(s);
  if (out.empty()) throw InputError("sentence must contain at least one word");
  return out;
}

int run_check(const Options& options) {
  auto universe = load_universe(options.universe_file);
  log_info("loaded universe with " + std::to_string(universe->size()) + " members");
  std::vector<std::pair<Formula, Formula>> pairs;
  if (!options.pairs_file.empty()) {
    pairs = load_pairs(options.pairs_file);
  } else {
    for (const auto& u : universe->formulas())
      for (const auto& v : universe->formulas()) pairs.emplace_back(u, v);
  }
  auto report = check_identities(universe, pairs);
  Json j = identity_report_to_json(report);
  j["universe_hash"] = universe->hash_hex();
  j["pair_count"] = pairs.size();

  std::string text = "conjunction identity exact: " + std::string(report.conj_exact ? "yes" : "no") +
                     "\ntruth identity exact: " + std::string(report.top_exact ? "yes" : "no") + "\n";
  std::size_t neg_total = 0, disj_total = 0;
  for (const auto& [u, d] : report.neg_defects) neg_total += d.size();
  for (const auto& [p, d] : report.disj_defects) disj_total += d.size();
  text += "negation defect entries: " + std::to_string(neg_total) + "\n";
  text += "disjunction defect entries: " + std::to_string(disj_total) + "\n";
  emit(j, options, text);

  if (!report.conj_exact || !report.top_exact)
    throw InternalCheckError("an identity that holds by theorem failed");
  return 0;
}

int run_entail(const Options& options, const std::string& u_text, const std::string& v_text) {
  auto universe = load_universe(options.universe_file);
  Formula u = parse_formula(u_text);
  Formula v = parse_formula(v_text);

  const bool semantic = entails(u, v, universe->atoms());
  const bool operator_order = leq(projection_of(u, universe), projection_of(v, universe));
  const auto down_u = universe->down_set(u);
  const auto down_v = universe->down_set(v);

  Json j;
  j["entails"] = semantic;
  j["op_leq"] = operator_order;
  j["down_set_size_u"] = down_u.size();
  j["down_set_size_v"] = down_v.size();
  emit(j, options,
       u_text + (semantic ? " entails " : " does not entail ") + v_text +
           " (operator order " + (operator_order ? "agrees" : "disagrees") + ", |down(u)| = " +
           std::to_string(down_u.size()) + ", |down(v)| = " + std::to_string(down_v.size()) +
           ")\n");

  if (semantic != operator_order)
    throw InternalCheckError("truth-table entailment and operator order disagree");
  return 0;
}

int run_algebra(const Options& options, const std::string& action, const std::string& x_text,
                const std::string& y_text) {
  auto language = load_scalar_language(options.language_file);
  log_info("loaded language with " + std::to_string(language->entries().size()) +
           " support strings");

  if (action == "info") {
    auto basis = string_basis(language, options.tol);
    const auto enumerated = enumerate_nonzero_strings(*language);
    Json j;
    j["string_count"] = enumerated.size();
    j["dimension"] = basis.dimension();
    Json strings = Json::array();
    for (const auto& s : basis.strings()) strings.push_back(to_string(s));
    j["basis"] = std::move(strings);
    std::string text = "strings with nonzero context vectors: " +
                       std::to_string(enumerated.size()) + "\nalgebra dimension: " +
                       std::to_string(basis.dimension()) + "\n";
    emit(j, options, text);
    return 0;
  }

  const Str x = parse_str(x_text);
  const Str y = parse_str(y_text);
  if (action == "mul") {
    auto product = multiply(element_from_string(language, x), element_from_string(language, y));
    Json coeffs = Json::object();
    for (const auto& [s, c] : product.coeffs()) coeffs[to_string(s)] = c;
    Json support = Json::array();
    for (const auto& [c, w] : product.context_function().support())
      support.push_back(Json::array({to_string(c.left), to_string(c.right)}));
    Json j;
    j["coeffs"] = std::move(coeffs);
    j["support"] = std::move(support);
    emit(j, options, "product has " + std::to_string(product.coeffs().size()) +
                         " coefficient(s) over " +
                         std::to_string(product.context_function().support().size()) +
                         " context(s)\n");
    return 0;
  }
  if (action == "order") {
    auto fx = context_vector(*language, x);
    auto fy = context_vector(*language, y);
    Json j;
    j["leq"] = cf_leq(fx, fy);
    j["geq"] = cf_leq(fy, fx);
    emit(j, options, std::string("x <= y: ") + (cf_leq(fx, fy) ? "yes" : "no") +
                         ", y <= x: " + (cf_leq(fy, fx) ? "yes" : "no") + "\n");
    return 0;
  }
  throw InputError("unknown algebra action '" + action + "' (expected info, mul or order)");
}

struct SemanticsBundle {
  UniversePtr universe;
  LanguagePtr<OperatorSpace> language;
  Lexicon lexicon;
};

SemanticsBundle load_semantics(const Options& options) {
  auto universe = load_universe(options.universe_file);
  auto interp = load_interpretation(options.interp_file, universe);
  auto lexicon = load_lexicon(options.lexicon_file);
  check_namespaces(*universe, interp, lexicon);
  if (!lexicon.nonnegative()) log_warn("lexicon has negative weights");
  return SemanticsBundle{universe, build_aspect_language(interp), std::move(lexicon)};
}

int run_compose(const Options& options, const std::string& sentence) {
  auto bundle = load_semantics(options);
  auto element = sentence_vector(split_words(sentence), bundle.lexicon, bundle.language);
  auto op = sentence_operator(element);
  Json j = operator_to_json(op);
  std::string text = "diag(";
  for (std::size_t i = 0; i < op.dim(); ++i)
    text += (i ? ", " : "") + std::to_string(op[i]);
  emit(j, options, text + ")\n");
  return 0;
}

int run_degree(const Options& options, const std::string& x_text, const std::string& y_text) {
  auto bundle = load_semantics(options);
  auto dist = options.dist_file.empty()
                  ? Distribution::uniform(bundle.universe)
                  : load_distribution(options.dist_file, bundle.universe);

  DegreeResult result;
  if (options.mode == "exact") {
    result = degree_exact(split_words(x_text), split_words(y_text), bundle.lexicon,
                          bundle.language, dist);
  } else if (options.mode == "mc") {
    result = degree_mc(split_words(x_text), split_words(y_text), bundle.lexicon,
                       bundle.language, dist, options.samples, options.seed, options.threads);
  } else {
    throw InputError("unknown mode '" + options.mode + "' (expected exact or mc)");
  }
  for (const auto& w : result.warnings) log_warn(w);

  char buffer[128];
  std::snprintf(buffer, sizeof buffer, "degree(x |= y) = %.6f\n", result.degree);
  emit(degree_result_to_json(result), options, buffer);
  return 0;
}

int run_gamma(const Options& options) {
  auto universe = load_universe(options.universe_file);
  auto gamma = load_gamma(options.gamma_file);
  auto built = build_gamma_language(gamma, universe);
  for (const auto& [x, y] : built.violations)
    log_warn("'" + to_string(x) + "' is a substring of '" + to_string(y) + "'");

  Json violations = Json::array();
  for (const auto& [x, y] : built.violations)
    violations.push_back(Json::array({to_string(x), to_string(y)}));

  bool supports_ok = true;
  bool embedding_ok = true;
  Json table = Json::array();
  for (const auto& [x, fx] : gamma.sentences) {
    auto hat_x = context_vector(*built.language, x);
    if (hat_x.support().size() != 1 || hat_x.support().begin()->first != Context{})
      supports_ok = false;
    for (const auto& [y, fy] : gamma.sentences) {
      auto hat_y = context_vector(*built.language, y);
      const bool vector_order = cf_leq(hat_x, hat_y);
      const bool logical = entails(fx, fy, universe->atoms());
      if (vector_order != logical) embedding_ok = false;
      Json row;
      row["x"] = to_string(x);
      row["y"] = to_string(y);
      row["cf_leq"] = vector_order;
      row["entails"] = logical;
      table.push_back(std::move(row));
    }
  }

  Json j;
  j["sentence_count"] = gamma.sentences.size();
  j["violations"] = std::move(violations);
  j["supports_empty_context_only"] = supports_ok;
  j["embedding_ok"] = embedding_ok;
  j["pairs"] = std::move(table);
  emit(j, options,
       "sentences: " + std::to_string(gamma.sentences.size()) + "\nsubstring violations: " +
           std::to_string(built.violations.size()) + "\nembedding matches entailment: " +
           (embedding_ok ? "yes" : "no") + "\n");

  // The embedding is a theorem only for substring-free gamma.
  if (built.violations.empty() && (!embedding_ok || !supports_ok))
    throw InternalCheckError("order embedding failed on a substring-free gamma");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"context algebras over finite general languages"};
  app.require_subcommand(1);
  Options options;

  auto add_format = [&options](CLI::App* cmd) {
    cmd->add_option("--format", options.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* check = app.add_subcommand("check", "verify the projection identities on a universe");
  check->add_option("--universe", options.universe_file, "universe file")->required();
  check->add_option("--pairs", options.pairs_file, "pairs file (defaults to all member pairs)");
  add_format(check);

  std::string u_text, v_text, action, x_text, y_text, sentence;

  auto* entail = app.add_subcommand("entail", "compare entailment with the operator order");
  entail->add_option("--universe", options.universe_file, "universe file")->required();
  entail->add_option("u", u_text, "antecedent formula")->required();
  entail->add_option("v", v_text, "consequent formula")->required();
  add_format(entail);

  auto* algebra = app.add_subcommand("algebra", "inspect a scalar context algebra");
  algebra->add_option("--language", options.language_file, "scalar language file")->required();
  algebra->add_option("action", action, "info, mul or order")->required();
  algebra->add_option("x", x_text, "first string (space-separated symbols)");
  algebra->add_option("y", y_text, "second string");
  algebra->add_option("--tol", options.tol, "pivot tolerance for basis extraction");
  add_format(algebra);

  auto* compose = app.add_subcommand("compose", "compose a sentence into its operator");
  compose->add_option("--universe", options.universe_file, "universe file")->required();
  compose->add_option("--interp", options.interp_file, "interpretation file")->required();
  compose->add_option("--lexicon", options.lexicon_file, "lexicon file")->required();
  compose->add_option("sentence", sentence, "sentence (quoted words)")->required();
  add_format(compose);

  auto* degree = app.add_subcommand("degree", "degree to which one sentence entails another");
  degree->add_option("--universe", options.universe_file, "universe file")->required();
  degree->add_option("--interp", options.interp_file, "interpretation file")->required();
  degree->add_option("--lexicon", options.lexicon_file, "lexicon file")->required();
  degree->add_option("--dist", options.dist_file, "distribution file (defaults to uniform)");
  degree->add_option("x", x_text, "entailing sentence")->required();
  degree->add_option("y", y_text, "entailed sentence")->required();
  degree->add_option("--mode", options.mode, "exact or mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  degree->add_option("--samples", options.samples, "Monte-Carlo sample count");
  degree->add_option("--seed", options.seed, "Monte-Carlo seed");
  degree->add_option("--threads", options.threads, "Monte-Carlo worker threads");
  add_format(degree);

  auto* gamma = app.add_subcommand("gamma", "check a sentence interpretation table");
  gamma->add_option("--universe", options.universe_file, "universe file")->required();
  gamma->add_option("--gamma", options.gamma_file, "gamma file")->required();
  add_format(gamma);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return run_check(options);
    if (entail->parsed()) return run_entail(options, u_text, v_text);
    if (algebra->parsed()) {
      if (action != "info" && (x_text.empty() || y_text.empty()))
        throw InputError("action '" + action + "' needs the two string arguments");
      return run_algebra(options, action, x_text, y_text);
    }
    if (compose->parsed()) return run_compose(options, sentence);
    if (degree->parsed()) return run_degree(options, x_text, y_text);
    if (gamma->parsed()) return run_gamma(options);
  } catch (const InternalCheckError& e) {
    std::cerr << "internal consistency violation: " << e.what() << "\n";
    return 4;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
