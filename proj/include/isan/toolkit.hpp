#pragma once

#include <map>
#include <set>
#include <string>

#include "isan/g2p.hpp"
#include "isan/lexicon.hpp"
#include "isan/orthography.hpp"
#include "isan/tonebox.hpp"
#include "isan/transcript.hpp"
#include "isan/tsv.hpp"

// Assembles the full pipeline from a data directory (or from the built-in
// tables, which mirror the shipped fixtures).

namespace isan {

inline std::set<std::string> load_word_set(const std::string& path) {
  std::set<std::string> out;
  for (const auto& row : read_tsv_file(path).rows)
    if (!row.fields.empty() && !row.fields[0].empty()) out.insert(row.fields[0]);
  return out;
}

inline std::map<std::string, std::string> load_pair_map(const std::string& path) {
  std::map<std::string, std::string> out;
  for (const auto& row : read_tsv_file(path).rows) {
    if (row.fields.size() < 2)
      raise(errc::format_error, path + ":" + std::to_string(row.line_no) + ": expected 2 columns");
    out[row.fields[0]] = row.fields[1];
  }
  return out;
}

struct DataPaths {
  std::string tonebox_thai;
  std::string tonebox_isan;
  std::string rules;
  std::string lexicon;
  std::string markers;
  std::string abbreviations;
  std::string kw_whitelist;
  std::string central_words;
  std::string foreign_coda;

  static DataPaths in_dir(const std::string& dir) {
    DataPaths p;
    p.tonebox_thai = dir + "/thai5.tsv";
    p.tonebox_isan = dir + "/isan6.tsv";
    p.rules = dir + "/correspondence_rules.tsv";
    p.lexicon = dir + "/lexicon.tsv";
    p.markers = dir + "/marker_lexicon.tsv";
    p.abbreviations = dir + "/abbreviations.tsv";
    p.kw_whitelist = dir + "/kw_whitelist.tsv";
    p.central_words = dir + "/central_thai_words.tsv";
    p.foreign_coda = dir + "/foreign_coda_map.tsv";
    return p;
  }
};

class Toolkit {
 public:
  // Built-in tables; identical content to the shipped data files.
  Toolkit() : thai_box_(thai_tone_box()), isan_box_(isan_tone_box()) {
    markers_ = builtin_marker_lexicon();
    transcript_config_ = default_transcript_config();
  }

  static Toolkit load(const DataPaths& paths) {
    Toolkit t;
    t.thai_box_ = load_tone_box_file(paths.tonebox_thai);
    t.isan_box_ = load_tone_box_file(paths.tonebox_isan);
    t.rules_ = load_rules_file(paths.rules);
    t.lexicon_ = load_lexicon_file(paths.lexicon);
    t.markers_ = load_marker_lexicon_file(paths.markers);
    t.central_words_ = load_word_set(paths.central_words);
    t.g2p_.set_tone_box(t.isan_box_);
    t.g2p_.set_kw_whitelist(load_word_set(paths.kw_whitelist));
    t.g2p_.set_foreign_coda_map(load_pair_map(paths.foreign_coda));
    t.transcript_config_.abbreviations = load_word_set(paths.abbreviations);
    return t;
  }

  static Toolkit load_dir(const std::string& dir) { return load(DataPaths::in_dir(dir)); }

  const ToneBox& thai_box() const { return thai_box_; }
  const ToneBox& isan_box() const { return isan_box_; }
  const Lexicon& lexicon() const { return lexicon_; }
  const G2p& g2p() const { return g2p_; }
  const MarkerLexicon& markers() const { return markers_; }
  TranscriptConfig& transcript_config() { return transcript_config_; }
  const TranscriptConfig& transcript_config() const { return transcript_config_; }

  Orthography orthography() const {
    Orthography o(lexicon_, g2p_);
    if (rules_) o.set_rules(*rules_);
    o.set_central_words(central_words_);
    return o;
  }

 private:
  ToneBox thai_box_;
  ToneBox isan_box_;
  std::optional<RuleSet> rules_;  // builtin when absent
  Lexicon lexicon_;
  G2p g2p_;
  MarkerLexicon markers_;
  TranscriptConfig transcript_config_;
  std::set<std::string> central_words_;
};

}  // namespace isan
