// Batch CLI for corpus pipelines: streams line-oriented UTF-8 through the
// library operations. Exit codes: 0 clean, 1 findings, 2 usage or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isan/isan.hpp"
#include "json.hpp"

using namespace isan;
using nlohmann::json;

namespace {

struct CliOptions {
  std::string data_dir;
  std::string config_path;
  std::string format = "text";
  bool strict = false;
};

std::string default_data_dir() {
  if (const char* env = std::getenv("ISAN_DATA_DIR")) return env;
#ifdef ISAN_DATA_DIR
  return ISAN_DATA_DIR;
#else
  return "data";
#endif
}

// Config file: key<TAB>value per line. Path keys override the data-dir
// defaults; `protected` and `latin` extend the transcript config.
struct LoadedConfig {
  Toolkit toolkit;
  TranscriptConfig transcript;
};

LoadedConfig load_config(const CliOptions& opts) {
  DataPaths paths = DataPaths::in_dir(opts.data_dir);
  std::vector<std::string> protected_spans;
  std::vector<std::string> latin;
  std::vector<std::pair<std::string, std::string>> script_pairs;
  if (!opts.config_path.empty()) {
    for (const auto& row : read_tsv_file(opts.config_path).rows) {
      if (row.fields.size() < 2)
        raise(errc::format_error,
              opts.config_path + ":" + std::to_string(row.line_no) + ": expected key<TAB>value");
      const std::string& key = row.fields[0];
      const std::string& value = row.fields[1];
      if (key == "tonebox_thai") paths.tonebox_thai = value;
      else if (key == "tonebox_isan") paths.tonebox_isan = value;
      else if (key == "rules") paths.rules = value;
      else if (key == "lexicon") paths.lexicon = value;
      else if (key == "markers") paths.markers = value;
      else if (key == "abbreviations") paths.abbreviations = value;
      else if (key == "kw_whitelist") paths.kw_whitelist = value;
      else if (key == "central_words") paths.central_words = value;
      else if (key == "foreign_coda") paths.foreign_coda = value;
      else if (key == "protected") protected_spans.push_back(value);
      else if (key == "latin") latin.push_back(value);
      else if (key == "script_pair") {
        auto pair = split(value, ',');
        if (pair.size() != 2)
          raise(errc::format_error, opts.config_path + ": script_pair wants thai,latin");
        script_pairs.emplace_back(pair[0], pair[1]);
      }
      else
        raise(errc::format_error, opts.config_path + ": unknown config key " + key);
    }
  }
  LoadedConfig out{Toolkit::load(paths), {}};
  out.transcript = out.toolkit.transcript_config();
  for (auto& s : protected_spans) out.transcript.protected_spans.push_back(s);
  for (auto& s : latin) out.transcript.latin_whitelist.insert(s);
  for (auto& p : script_pairs) out.transcript.script_pairs.push_back(p);
  return out;
}

std::vector<std::string> read_input_lines(const std::vector<std::string>& files) {
  std::vector<std::string> lines;
  auto drain = [&](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  };
  if (files.empty()) {
    drain(std::cin);
  } else {
    for (const auto& f : files) {
      std::ifstream in(f, std::ios::binary);
      if (!in) raise(errc::io_error, "cannot open " + f);
      drain(in);
    }
  }
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int run_tone(const CliOptions& opts, const LoadedConfig& cfg,
             const std::vector<std::string>& files, const std::string& system) {
  const ToneBox& box = system == "thai" ? cfg.toolkit.thai_box() : cfg.toolkit.isan_box();
  for (const auto& line : read_input_lines(files)) {
    for (const auto& tok : tokens_of(line)) {
      try {
        OrthoSyllable s = parse_syllable(tok);
        ToneCategory tone = system == "thai" ? compute_thai_tone(s) : compute_isan_tone(s, box);
        if (opts.format == "structured") {
          json j{{"token", tok},
                 {"class", to_string(effective_class(s))},
                 {"kind", to_string(syllable_kind(s))},
                 {"tone", tone.label}};
          std::cout << j.dump() << "\n";
        } else {
          std::cout << tok << "\t" << to_string(effective_class(s)) << "\t"
                    << to_string(syllable_kind(s)) << "\t" << tone.label << "\n";
        }
      } catch (const error& e) {
        if (opts.strict) {
          std::cerr << "isan tone: " << tok << ": " << e.what() << "\n";
          return 2;
        }
        std::cout << tok << "\t-\t-\t" << e.what() << "\n";
      }
    }
  }
  return 0;
}

int run_phonemize(const CliOptions& opts, const LoadedConfig& cfg,
                  const std::vector<std::string>& files, bool variants) {
  for (const auto& line : read_input_lines(files)) {
    for (const auto& tok : tokens_of(line)) {
      try {
        auto lex_entries = cfg.toolkit.lexicon().lookup(tok);
        size_t n = 1;
        if (variants && !lex_entries.empty()) n = lex_entries.front()->variant_count();
        for (size_t v = 0; v < n; ++v) {
          Pronunciation p = cfg.toolkit.g2p().phonemize_word(tok, cfg.toolkit.lexicon(), v);
          if (opts.format == "structured") {
            json j{{"word", tok}, {"pronunciation", to_string(p)}, {"variant", v}};
            std::cout << j.dump() << "\n";
          } else {
            std::cout << tok << "\t" << to_string(p) << "\n";
          }
        }
      } catch (const error& e) {
        if (opts.strict) {
          std::cerr << "isan phonemize: " << tok << ": " << e.what() << "\n";
          return 2;
        }
        std::cout << tok << "\t" << e.what() << "\n";
      }
    }
  }
  return 0;
}

int run_suggest(const CliOptions& opts, const LoadedConfig& cfg,
                const std::vector<std::string>& files) {
  Orthography ortho = cfg.toolkit.orthography();
  for (const auto& line : read_input_lines(files)) {
    if (strip(line).empty()) continue;
    auto fields = split(line, '\t');
    try {
      PhoneticSyllable pron = parse_phonetic_syllable(fields[0]);
      std::optional<std::string> etymon;
      if (fields.size() > 1 && !fields[1].empty()) etymon = fields[1];
      SpellingDecision d = ortho.derive_spelling(pron, etymon);
      if (opts.format == "structured") {
        json j{{"pronunciation", fields[0]},
               {"spelling", d.spelling},
               {"alternatives", d.alternatives},
               {"trail", d.trail}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << fields[0] << "\t" << d.spelling << "\t" << join(d.alternatives, ",")
                  << "\n";
      }
    } catch (const error& e) {
      if (opts.strict) {
        std::cerr << "isan suggest-spelling: " << e.what() << "\n";
        return 2;
      }
      std::cout << fields[0] << "\t" << e.what() << "\t-\n";
    }
  }
  return 0;
}

int run_correspond(const CliOptions& opts, const LoadedConfig& cfg,
                   const std::vector<std::string>& files) {
  Orthography ortho = cfg.toolkit.orthography();
  for (const auto& line : read_input_lines(files)) {
    if (strip(line).empty()) continue;
    auto fields = split(line, '\t');
    try {
      std::optional<Pronunciation> pron;
      if (fields.size() > 1 && !fields[1].empty() && fields[1] != "-")
        pron = parse_pronunciation(fields[1]);
      std::string out = ortho.apply_correspondence(fields[0], pron);
      if (opts.format == "structured") {
        json j{{"word", fields[0]}, {"spelling", out}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << fields[0] << "\t" << out << "\n";
      }
    } catch (const error& e) {
      if (opts.strict) {
        std::cerr << "isan correspond: " << e.what() << "\n";
        return 2;
      }
      std::cout << fields[0] << "\t" << e.what() << "\n";
    }
  }
  return 0;
}

int run_validate(const CliOptions& opts, const LoadedConfig& cfg,
                 const std::vector<std::string>& files) {
  bool findings = false;
  for (const auto& f : files) {
    TranscriptReport report = validate_file(f, cfg.transcript);
    if (!report.ok()) findings = true;
    if (opts.format == "structured") {
      for (const auto& lr : report.lines)
        for (const auto& d : lr.diagnostics) {
          json j{{"file", f},          {"line", lr.line_no}, {"start", d.begin},
                 {"end", d.end},       {"rule", d.rule},     {"severity", to_string(d.severity)},
                 {"message", d.message}};
          if (d.fixed_line) j["fix"] = *d.fixed_line;
          std::cout << j.dump() << "\n";
        }
    } else {
      std::cout << format_report_text(report, f);
      std::cout << f << ": " << report.errors << " error(s), " << report.warnings
                << " warning(s)\n";
    }
  }
  return findings ? 1 : 0;
}

int run_classify(const CliOptions& opts, const LoadedConfig& cfg, const std::string& file) {
  ToneBox elicited = load_tone_box_file(file);
  DialectClass d = classify_dialect(gedney_cells_of(elicited), cfg.toolkit.isan_box());
  if (opts.format == "structured") {
    std::cout << json{{"file", file}, {"class", to_string(d)}}.dump() << "\n";
  } else {
    std::cout << to_string(d) << "\n";
  }
  return 0;
}

int run_dict_build(const CliOptions&, const LoadedConfig& cfg,
                   const std::vector<std::string>& files, const std::string& output) {
  std::vector<std::string> words;
  for (const auto& line : read_input_lines(files)) {
    std::string w = strip(line);
    if (!w.empty()) words.push_back(w);
  }
  DictStore store = build_dictionary(words, cfg.toolkit.lexicon(), cfg.toolkit.g2p());
  std::string text = serialize_dictionary(store);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) raise(errc::io_error, "cannot write " + output);
    out << text;
  }
  return 0;
}

int run_dict_lookup(const CliOptions& opts, const LoadedConfig&, const std::string& dict_path,
                    const std::string& headword, const std::string& context) {
  DictStore store = parse_dictionary_file(dict_path);
  DictLookup result;
  try {
    result = lookup(store, headword,
                    context.empty() ? std::nullopt : std::optional<std::string>(context));
  } catch (const error& e) {
    if (e.code() == errc::not_found) {
      std::cerr << "isan dict lookup: " << e.what() << "\n";
      return 1;
    }
    throw;
  }
  for (const DictEntry* e : result.entries) {
    for (const auto& p : e->prons) {
      if (opts.format == "structured") {
        json j{{"headword", e->headword},
               {"context", e->context},
               {"rank", to_string(p.rank)},
               {"pronunciation", to_string(p.phones)},
               {"origin", to_string(e->origin)},
               {"ambiguous", result.ambiguous}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << e->headword << "\t" << (e->context.empty() ? "-" : e->context) << "\t"
                  << to_string(p.rank) << "\t" << to_string(p.phones) << "\t"
                  << to_string(e->origin) << (result.ambiguous ? "\tambiguous" : "") << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isan text toolkit: tone boxes, spelling, transcripts, g2p"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  CliOptions opts;
  opts.data_dir = default_data_dir();
  app.add_option("--data-dir", opts.data_dir, "Directory holding the data files");
  app.add_option("--config", opts.config_path, "Config file (key<TAB>value)");
  app.add_option("--format", opts.format, "Output format: text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--strict", opts.strict, "Exit 2 on unparseable input");

  std::vector<std::string> files;
  std::string system = "isan";
  auto* tone = app.add_subcommand("tone", "Per-syllable tone report");
  tone->add_option("files", files, "Input files (stdin when absent)");
  tone->add_option("--system", system, "Tone system: isan or thai")
      ->check(CLI::IsMember({"isan", "thai"}));

  bool variants = false;
  auto* phonemize = app.add_subcommand("phonemize", "Words to citation-form pronunciations");
  phonemize->add_option("files", files, "Input files (stdin when absent)");
  phonemize->add_flag("--variants", variants, "Emit lexical variants, not just the primary");

  auto* suggest = app.add_subcommand("suggest-spelling",
                                     "Inverse tone box: pronunciation[TAB]etymon per line");
  suggest->add_option("files", files, "Input files (stdin when absent)");

  auto* correspond = app.add_subcommand("correspond",
                                        "Apply correspondence rules: word[TAB]pronunciation");
  correspond->add_option("files", files, "Input files (stdin when absent)");

  std::vector<std::string> transcript_files;
  auto* validate = app.add_subcommand("validate-transcript", "Check transcript conventions");
  validate->add_option("files", transcript_files, "Transcript files")->required();

  std::string box_file;
  auto* classify = app.add_subcommand("classify-dialect", "Classify an elicited Gedney box");
  classify->add_option("box", box_file, "Elicited box TSV")->required();

  auto* dict = app.add_subcommand("dict", "Pronunciation dictionary");
  dict->require_subcommand(1);
  std::string dict_output;
  auto* dict_build = dict->add_subcommand("build", "Build a dictionary from a word list");
  dict_build->add_option("files", files, "Word-list files (stdin when absent)");
  dict_build->add_option("-o,--output", dict_output, "Output path (stdout when absent)");
  std::string dict_path, headword, context;
  auto* dict_lookup = dict->add_subcommand("lookup", "Look a headword up");
  dict_lookup->add_option("headword", headword, "Headword")->required();
  dict_lookup->add_option("--dict", dict_path, "Dictionary file")->required();
  dict_lookup->add_option("--context", context, "Homograph context tag");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // exits 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    LoadedConfig cfg = load_config(opts);
    if (tone->parsed()) return run_tone(opts, cfg, files, system);
    if (phonemize->parsed()) return run_phonemize(opts, cfg, files, variants);
    if (suggest->parsed()) return run_suggest(opts, cfg, files);
    if (correspond->parsed()) return run_correspond(opts, cfg, files);
    if (validate->parsed()) return run_validate(opts, cfg, transcript_files);
    if (classify->parsed()) return run_classify(opts, cfg, box_file);
    if (dict->parsed()) {
      if (dict_build->parsed()) return run_dict_build(opts, cfg, files, dict_output);
      if (dict_lookup->parsed()) return run_dict_lookup(opts, cfg, dict_path, headword, context);
    }
  } catch (const error& e) {
    std::cerr << "isan: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "isan: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
