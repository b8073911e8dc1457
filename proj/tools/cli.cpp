#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tangent/automata.hpp"
#include "tangent/counting.hpp"
#include "tangent/derivation.hpp"
#include "tangent/error.hpp"
#include "tangent/geometry.hpp"
#include "tangent/language.hpp"
#include "tangent/report.hpp"

namespace tangent::cli {

namespace {

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Plain };

const std::map<std::string, Format> kFormats = {
    {"json", Format::Json}, {"csv", Format::Csv}, {"plain", Format::Plain}};

const std::vector<std::string> kLanguages = {"balanced", "analytic", "tangent", "2balanced"};

std::vector<double> parse_reals(const std::string& text, std::size_t expected_min,
                                std::size_t expected_max, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size()) {
      throw UsageError(flag + ": '" + item + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.size() < expected_min || out.size() > expected_max) {
    throw UsageError(flag + ": wrong number of values in '" + text + "'");
  }
  return out;
}

CurveSpec make_curve(const std::string& kind, const std::string& params, const std::string& domain) {
  const auto d = parse_reals(domain, 2, 2, "--domain");
  if (kind == "line") {
    const auto p = parse_reals(params, 2, 2, "--params");
    return {Line{p[0], p[1]}, d[0], d[1]};
  }
  if (kind == "parabola") {
    const auto p = parse_reals(params, 3, 3, "--params");
    return {Parabola{p[0], p[1], p[2]}, d[0], d[1]};
  }
  if (kind == "exp") {
    const auto p = parse_reals(params, 2, 2, "--params");
    return {Exponential{p[0], p[1]}, d[0], d[1]};
  }
  throw UsageError("--kind must be line, parabola or exp");
}

// Writes to --out when given, otherwise to stdout.
void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + out_path + " for writing");
  file << text;
  if (!file) throw std::runtime_error("failed writing " + out_path);
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// Table with string cells rendered in one of the three formats.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;

  std::string render(Format format) const {
    std::ostringstream out;
    if (format == Format::Json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      return json_text(arr);
    }
    const auto cell = [](const nlohmann::json& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    const char* sep = format == Format::Csv ? "," : "  ";
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? sep : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? sep : "") << cell(row[i]);
      out << '\n';
    }
    return out.str();
  }
};

nlohmann::json words_json(const std::vector<Word>& words) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Word& w : words) arr.push_back(w.str());
  return arr;
}

std::string word_list(const std::vector<Word>& words, Format format) {
  if (format == Format::Json) return json_text(words_json(words));
  std::string out = format == Format::Csv ? "word\n" : "";
  for (const Word& w : words) out += w.str() + "\n";
  return out;
}

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

struct Options {
  Format format = Format::Plain;
  std::string word;
  bool accelerated = false;
  std::string lang;
  std::size_t n = 0;
  std::string method = "all";
  std::string out_path;
  std::uint64_t p = 0, q = 0;
  std::vector<std::string> slalom;
  std::string kind, params, domain, mesh = "1", offset = "0,0", meshes;
  std::size_t offsets = 1, max_len = 8;
};

std::string cmd_classify(const Options& o) {
  const Word w = Word::parse(o.word);
  const auto trace =
      derive(w, o.accelerated ? DerivationMode::Accelerated : DerivationMode::Plain);
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"input", s.input.str()},
                     {"rule", std::string(rule_name(s.rule))},
                     {"output", s.output.str()}});
  }
  const nlohmann::json report = {
      {"word", w.str()},
      {"balanced", is_balanced(w)},
      {"analytic", is_analytic_tangent(w)},
      {"tangent", is_tangent(w)},
      {"two_balanced", is_k_balanced(w, 2)},
      {"derivation", steps},
      {"final", trace.final.str()},
  };
  if (o.format != Format::Plain) return json_text(report);
  std::ostringstream out;
  out << "word          " << w << "\n";
  for (const char* key : {"balanced", "analytic", "tangent", "two_balanced"}) {
    out << std::left << std::setw(14) << key << (report[key].get<bool>() ? "yes" : "no") << "\n";
  }
  for (const auto& s : trace.steps) {
    out << "  " << s.input << " -> " << s.output << "  (" << rule_name(s.rule) << ")\n";
  }
  out << "final         " << (trace.final.empty() ? "(empty)" : trace.final.str()) << "\n";
  return out.str();
}

std::string cmd_complexity(const Options& o, const EnumerationConfig& config) {
  const LanguageId lang = LanguageId::parse(o.lang);
  const bool is_balanced_lang = lang == LanguageId::balanced();
  const bool has_closed_form = is_balanced_lang || lang == LanguageId::analytic() ||
                               lang == LanguageId::tangent();
  const bool want_enum = o.method == "enum" || o.method == "all";
  const bool want_paper = o.method == "paper" || o.method == "all";
  const bool want_candidate = o.method == "candidate" || o.method == "all";
  if (!want_enum && !has_closed_form) {
    throw UsageError("no closed form is available for " + lang.name());
  }

  std::optional<ComplexityProfile> profile;
  if (want_enum) profile = complexity_profile(lang, o.n, config);

  Table table;
  table.columns.push_back("n");
  if (want_enum) table.columns.push_back("enum");
  if (is_balanced_lang) {
    if (want_paper || want_candidate) table.columns.push_back("lipatov");
  } else if (has_closed_form) {
    if (want_paper) table.columns.push_back("paper");
    if (want_candidate) table.columns.push_back("candidate");
  }
  for (std::size_t n = 0; n <= o.n; ++n) {
    std::vector<nlohmann::json> row{n};
    if (want_enum) row.push_back(profile->p[n]);
    if (is_balanced_lang) {
      if (want_paper || want_candidate) row.push_back(count_to_json(lipatov_balanced(n)));
    } else if (has_closed_form) {
      const bool analytic = lang == LanguageId::analytic();
      const auto value = [&](ClosedFormVariant v) {
        return count_to_json(analytic ? prop3_analytic(n, v) : prop3_tangent(n, v));
      };
      if (want_paper) row.push_back(value(ClosedFormVariant::PaperAsPrinted));
      if (want_candidate) row.push_back(value(ClosedFormVariant::GeometricCandidate));
    }
    table.rows.push_back(std::move(row));
  }
  return table.render(o.format);
}

int cmd_reconcile(const Options& o, const EnumerationConfig& config, std::ostream& out,
                  std::ostream& err) {
  const auto report = reconcile(o.n, config);
  const std::string text = o.format == Format::Csv ? to_csv(report) : json_text(to_json(report));
  try {
    emit(text, o.out_path, out);
  } catch (const std::exception& e) {
    err << "IOError: " << e.what() << "\n";
    return kRuntimeError;
  }
  // Keep stdout parseable when the report itself goes there.
  std::ostream& summary = o.out_path.empty() ? err : out;
  for (const auto& row : report.rows) {
    for (const auto& column : row.mismatches()) {
      summary << "mismatch n=" << row.n << " " << column << "\n";
    }
  }
  return 0;
}

std::string cmd_enumerate(const Options& o, const EnumerationConfig& config) {
  return word_list(enumerate_words(LanguageId::parse(o.lang), o.n, config), o.format);
}

std::string cmd_bispecial(const Options& o, const EnumerationConfig& config) {
  const LanguageId lang = LanguageId::parse(o.lang);
  const auto census = bispecial_census(lang, o.n, config);
  const auto thin = observe_thin_diagonal(census);
  if (o.format == Format::Json) {
    return json_text({{"lang", lang.name()},
                      {"n", census.length},
                      {"wb", census.wb()},
                      {"ordinary", census.ob()},
                      {"sb", census.sb()},
                      {"weak_words", words_json(census.weak)},
                      {"ordinary_words", words_json(census.ordinary)},
                      {"strong_words", words_json(census.strong)},
                      {"thin_diagonal",
                       {{"weak", thin.weak}, {"ordinary", thin.ordinary}, {"strong", thin.strong}}}});
  }
  Table table{{"word", "class", "thin_diagonal"}, {}};
  const auto add = [&](const std::vector<Word>& ws, BispecialClass c) {
    for (const Word& w : ws) {
      table.rows.push_back({w.str(), std::string(class_name(c)), is_thin_diagonal(w)});
    }
  };
  add(census.weak, BispecialClass::Weak);
  add(census.ordinary, BispecialClass::Ordinary);
  add(census.strong, BispecialClass::Strong);
  std::string text = table.render(o.format);
  if (o.format == Format::Plain) {
    text += "wb=" + std::to_string(census.wb()) + " ordinary=" + std::to_string(census.ob()) +
            " sb=" + std::to_string(census.sb()) + "\n";
  }
  return text;
}

std::string cmd_audit(const Options& o, const EnumerationConfig& config) {
  const auto audit = inclusion_audit(o.n, config);
  std::size_t analytic_words = 0;
  std::vector<Word> split_failures;
  for (const auto& level : enumerate_levels(LanguageId::analytic(), o.n, config)) {
    for (const Word& w : level) {
      ++analytic_words;
      if (!splits_into_two_balanced(w)) split_failures.push_back(w);
    }
  }
  Table table{{"smaller", "larger", "members_checked", "witness"}, {}};
  for (const auto& c : audit.checks) {
    table.rows.push_back({c.smaller.name(), c.larger.name(), c.members_checked,
                          c.witness ? nlohmann::json(c.witness->str()) : nlohmann::json(nullptr)});
  }
  if (o.format == Format::Json) {
    nlohmann::json checks = nlohmann::json::parse(table.render(Format::Json));
    return json_text({{"n_max", audit.n_max},
                      {"chain_holds", true},
                      {"inclusions", checks},
                      {"analytic_split", {{"words_checked", analytic_words},
                                          {"counterexamples", words_json(split_failures)}}}});
  }
  std::string text = table.render(o.format);
  if (o.format == Format::Plain) {
    text += "analytic words checked for a balanced split: " + std::to_string(analytic_words) +
            ", counterexamples: " + std::to_string(split_failures.size()) + "\n";
  }
  return text;
}

std::string cmd_code_segment(const Options& o) {
  std::vector<Word> words;
  if (o.slalom.empty()) {
    words.push_back(segment_coding(o.p, o.q));
  } else if (o.slalom[0] == "above" || o.slalom[0] == "below") {
    const auto [above, under] = analytic_slalom_pair(o.p, o.q);
    words.push_back(o.slalom[0] == "above" ? above : under);
  } else if (o.slalom[0] == "all") {
    words = slalom_bispecials(o.p, o.q);
  } else if (o.slalom[0] == "mask") {
    if (o.slalom.size() != 2) throw UsageError("--slalom mask needs a bit string");
    std::vector<SlalomSide> sides;
    for (char c : o.slalom[1]) {
      if (c != '0' && c != '1') throw UsageError("--slalom mask takes a string of 0/1");
      sides.push_back(c == '1' ? SlalomSide::Above : SlalomSide::Under);
    }
    words.push_back(slalom_word(o.p, o.q, sides));
  } else {
    throw UsageError("--slalom must be above, below, all or mask BITS");
  }
  return word_list(words, o.format);
}

std::string cmd_code_curve(const Options& o) {
  const CurveSpec curve = make_curve(o.kind, o.params, o.domain);
  const auto mesh = parse_reals(o.mesh, 1, 1, "--mesh");
  const auto offset = parse_reals(o.offset, 2, 2, "--offset");
  const Word w = cutting_sequence(curve, {mesh[0], offset[0], offset[1]});
  if (o.format == Format::Json) {
    return json_text({{"curve", to_json(curve)},
                      {"mesh", round_significant(mesh[0])},
                      {"offset", {round_significant(offset[0]), round_significant(offset[1])}},
                      {"word", w.str()}});
  }
  return w.str() + "\n";
}

std::string cmd_scan(const Options& o) {
  const CurveSpec curve = make_curve(o.kind, o.params, o.domain);
  const auto meshes = o.meshes.empty() ? std::vector<double>{}
                                       : parse_reals(o.meshes, 1, 1000, "--meshes");
  return json_text(to_json(multigrid_factor_scan(curve, meshes, o.offsets, o.max_len)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tangent word toolkit: recognition, enumeration, counting and curve coding"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "Membership verdicts and derivation of a word");
  classify->add_option("word", o.word, "Word over {0,1}")->required();
  classify->add_flag("--accelerated", o.accelerated, "Use accelerated desubstitution steps");
  Format classify_format = Format::Json;
  add_format(classify, classify_format);

  auto add_lang = [&](CLI::App* cmd) {
    cmd->add_option("--lang", o.lang, "balanced | analytic | tangent | 2balanced")
        ->required()
        ->check(CLI::IsMember(kLanguages));
  };

  auto* complexity = app.add_subcommand("complexity", "Complexity table p_n");
  add_lang(complexity);
  complexity->add_option("--max", o.n, "Largest length")->required();
  complexity->add_option("--method", o.method, "enum | paper | candidate | all")
      ->check(CLI::IsMember({"enum", "paper", "candidate", "all"}));
  add_format(complexity, o.format);

  auto* reconcile_cmd = app.add_subcommand("reconcile", "Enumeration vs closed forms");
  reconcile_cmd->add_option("--max", o.n, "Largest length")->required();
  reconcile_cmd->add_option("--out", o.out_path, "Report path (stdout if omitted)");
  Format reconcile_format = Format::Json;
  add_format(reconcile_cmd, reconcile_format);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Members of a language of one length");
  add_lang(enumerate_cmd);
  enumerate_cmd->add_option("--len", o.n, "Word length")->required();
  add_format(enumerate_cmd, o.format);

  auto* bispecial = app.add_subcommand("bispecial", "Bispecial census of one length");
  add_lang(bispecial);
  bispecial->add_option("--len", o.n, "Word length")->required();
  add_format(bispecial, o.format);

  auto* audit = app.add_subcommand("audit", "Inclusion chain audit with witnesses");
  audit->add_option("--max", o.n, "Largest length")->required();
  add_format(audit, o.format);

  auto* segment = app.add_subcommand("code-segment", "Coding of a lattice segment");
  segment->add_option("P", o.p, "x extent")->required();
  segment->add_option("Q", o.q, "y extent")->required();
  segment->add_option("--slalom", o.slalom, "above | below | all | mask BITS")->expected(1, 2);
  add_format(segment, o.format);

  auto add_curve = [&](CLI::App* cmd) {
    cmd->add_option("--kind", o.kind, "line | parabola | exp")->required();
    cmd->add_option("--params", o.params, "Comma-separated curve parameters")->required();
    cmd->add_option("--domain", o.domain, "A,B")->required();
  };
  auto* curve = app.add_subcommand("code-curve", "Cutting sequence of a monotone curve");
  add_curve(curve);
  curve->add_option("--mesh", o.mesh, "Grid mesh");
  curve->add_option("--offset", o.offset, "OX,OY");
  add_format(curve, o.format);

  auto* scan = app.add_subcommand("scan", "Multigrid factor scan of a curve (JSON)");
  add_curve(scan);
  scan->add_option("--meshes", o.meshes, "Comma-separated meshes");
  scan->add_option("--offsets", o.offsets, "Offsets per mesh");
  scan->add_option("--max-len", o.max_len, "Largest factor length");
  scan->add_option("--out", o.out_path, "Report path (stdout if omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    const EnumerationConfig config = EnumerationConfig::from_env();
    if (classify->parsed()) {
      o.format = classify_format;
      out << cmd_classify(o);
    } else if (complexity->parsed()) {
      out << cmd_complexity(o, config);
    } else if (reconcile_cmd->parsed()) {
      o.format = reconcile_format;
      return cmd_reconcile(o, config, out, err);
    } else if (enumerate_cmd->parsed()) {
      out << cmd_enumerate(o, config);
    } else if (bispecial->parsed()) {
      out << cmd_bispecial(o, config);
    } else if (audit->parsed()) {
      out << cmd_audit(o, config);
    } else if (segment->parsed()) {
      out << cmd_code_segment(o);
    } else if (curve->parsed()) {
      out << cmd_code_curve(o);
    } else if (scan->parsed()) {
      emit(cmd_scan(o), o.out_path, out);
    }
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidCharacter& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kRuntimeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return 0;
}

}  // namespace tangent::cli
