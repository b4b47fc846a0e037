#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isan/error.hpp"
#include "isan/tsv.hpp"

// Word-level annotations shared by the spelling standard and the phonetic
// dictionary builder: word origin, homograph contexts, explicit
// syllabifications and per-word phonemization hints.

namespace isan {

enum class WordOrigin { ProperName, Loanword, ThaiCognate, IsanNative };

inline const char* to_string(WordOrigin o) {
  switch (o) {
    case WordOrigin::ProperName: return "ProperName";
    case WordOrigin::Loanword: return "Loanword";
    case WordOrigin::ThaiCognate: return "ThaiCognate";
    case WordOrigin::IsanNative: return "IsanNative";
  }
  return "?";
}

inline std::optional<WordOrigin> word_origin_from_string(std::string_view s) {
  if (s == "ProperName") return WordOrigin::ProperName;
  if (s == "Loanword") return WordOrigin::Loanword;
  if (s == "ThaiCognate") return WordOrigin::ThaiCognate;
  if (s == "IsanNative") return WordOrigin::IsanNative;
  return std::nullopt;
}

// Hints are ordered value lists per key; multi-valued keys induce
// pronunciation variants (first value = primary). Keys in use:
//   r   ร onset: h|l            y    ย onset: j|ɲ
//   ch  ช ฉ onset: s|tɕʰ        kw   ว cluster: keep|reduce
//   tone  tone label override   nucleus  vowel override
//   final  foreign final consonant   pron  full pronunciation string
using HintMap = std::map<std::string, std::vector<std::string>>;

struct LexiconEntry {
  std::string headword;
  WordOrigin origin = WordOrigin::ThaiCognate;
  std::string context;                  // homograph tag, empty for plain words
  std::vector<std::string> syllables;   // explicit syllabification, may be empty
  HintMap hints;
  bool dictionary_attested = false;     // listed in the reference dictionary
  std::string gloss;
  std::string etymon;                   // Central Thai source form, when traceable

  // Number of pronunciation variants the hints induce.
  size_t variant_count() const {
    size_t n = 1;
    for (const auto& [k, vs] : hints)
      if (vs.size() > n) n = vs.size();
    return n;
  }

  // Hint value for `key` under variant `index`; single-valued hints apply to
  // every variant.
  std::optional<std::string> hint(const std::string& key, size_t index = 0) const {
    auto it = hints.find(key);
    if (it == hints.end() || it->second.empty()) return std::nullopt;
    if (index < it->second.size()) return it->second[index];
    return it->second.front();
  }
};

inline HintMap parse_hints(std::string_view text) {
  HintMap out;
  if (text.empty() || text == "-") return out;
  for (const auto& item : split(text, ';')) {
    auto kv = split(item, '=');
    if (kv.size() != 2 || kv[0].empty())
      raise(errc::format_error, "bad hint \"" + std::string(item) + "\"");
    out[kv[0]] = split(kv[1], ',');
  }
  return out;
}

inline std::string hints_to_string(const HintMap& hints) {
  std::vector<std::string> items;
  for (const auto& [k, vs] : hints) items.push_back(k + "=" + join(vs, ","));
  return items.empty() ? "-" : join(items, ";");
}

class Lexicon {
 public:
  Lexicon() = default;

  void add(LexiconEntry entry) {
    index_.emplace(entry.headword, entries_.size());
    entries_.push_back(std::move(entry));
  }

  std::vector<const LexiconEntry*> lookup(const std::string& headword) const {
    std::vector<const LexiconEntry*> out;
    auto [lo, hi] = index_.equal_range(headword);
    for (auto it = lo; it != hi; ++it) out.push_back(&entries_[it->second]);
    return out;
  }

  const LexiconEntry* lookup(const std::string& headword, const std::string& context) const {
    for (const LexiconEntry* e : lookup(headword))
      if (e->context == context) return e;
    return nullptr;
  }

  bool contains(const std::string& headword) const { return index_.count(headword) > 0; }
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

 private:
  std::vector<LexiconEntry> entries_;
  std::multimap<std::string, size_t> index_;
};

// Columns: headword, origin, context, syllabification (hyphen-joined),
// hints, dictionary_attested (0/1), gloss, etymon. "-" marks an empty field.
// The file carries the same "#isan-dict v1" version header as dictionaries.
inline Lexicon load_lexicon(const TsvFile& tsv, const std::string& origin) {
  bool versioned = false;
  for (const auto& d : tsv.directives)
    if (strip(d) == "#isan-dict v1") versioned = true;
  if (!versioned)
    raise(errc::format_error, origin + ":1: missing \"#isan-dict v1\" header");
  Lexicon lex;
  for (const auto& row : tsv.rows) {
    const auto where = origin + ":" + std::to_string(row.line_no);
    if (row.fields.size() < 2) raise(errc::format_error, where + ": too few columns");
    LexiconEntry e;
    e.headword = row.fields[0];
    if (e.headword.empty()) raise(errc::format_error, where + ": empty headword");
    auto o = word_origin_from_string(row.fields[1]);
    if (!o) raise(errc::format_error, where + ": unknown origin " + row.fields[1]);
    e.origin = *o;
    auto field = [&](size_t i) -> std::string {
      if (i >= row.fields.size()) return "";
      return row.fields[i] == "-" ? "" : row.fields[i];
    };
    e.context = field(2);
    if (std::string syl = field(3); !syl.empty()) e.syllables = split(syl, '-');
    e.hints = parse_hints(field(4));
    e.dictionary_attested = field(5) == "1";
    e.gloss = field(6);
    e.etymon = field(7);
    lex.add(std::move(e));
  }
  return lex;
}

inline Lexicon load_lexicon_file(const std::string& path) {
  return load_lexicon(read_tsv_file(path), path);
}

}  // namespace isan
