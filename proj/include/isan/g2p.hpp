#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "isan/error.hpp"
#include "isan/lexicon.hpp"
#include "isan/script.hpp"
#include "isan/tonebox.hpp"
#include "isan/tsv.hpp"

// Grapheme-to-phoneme conversion to Isan citation forms, the phonotactic
// validator, and the pronunciation dictionary (variants + homographs).

namespace isan {

// ---------------------------------------------------------------------------
// Phoneme inventory

struct PhonemeInventory {
  // Native single onsets; tɕʰ is carried separately as a contact phoneme
  // restricted to loans and proper names.
  std::vector<std::string> native_onsets;
  std::vector<std::string> contact_onsets;
  std::vector<std::string> cluster_second;  // only /w/, and only after /kʰ/
  std::vector<std::string> vowels;
  std::vector<std::string> codas;
  std::vector<std::string> tones;           // T1..T6 plus contact tone TRI

  bool is_onset(std::string_view p) const {
    return contains(native_onsets, p) || contains(contact_onsets, p);
  }
  bool is_vowel(std::string_view p) const { return contains(vowels, p); }
  bool is_coda(std::string_view p) const { return contains(codas, p); }
  bool is_tone(std::string_view p) const { return contains(tones, p); }

  bool is_diphthong(std::string_view v) const { return v == "ia" || v == "ɯa" || v == "ua"; }
  bool is_short_vowel(std::string_view v) const {
    return !is_diphthong(v) && v.find("\xCB\x90") == std::string_view::npos;  // ː
  }

  static bool contains(const std::vector<std::string>& hay, std::string_view needle) {
    return std::find(hay.begin(), hay.end(), needle) != hay.end();
  }
};

inline const PhonemeInventory& phoneme_inventory() {
  static const PhonemeInventory inv = [] {
    PhonemeInventory v;
    v.native_onsets = {"p", "pʰ", "b", "t", "tʰ", "d", "tɕ", "k", "kʰ",
                       "ʔ", "m", "n", "ɲ", "ŋ", "f", "s", "h", "l", "w", "j"};
    v.contact_onsets = {"tɕʰ"};
    v.cluster_second = {"w"};
    v.vowels = {"i", "iː", "e", "eː", "ɛ", "ɛː", "a", "aː", "ɔ", "ɔː",
                "o", "oː", "u", "uː", "ɯ", "ɯː", "ɤ", "ɤː", "ia", "ɯa", "ua"};
    v.codas = {"p̚", "t̚", "k̚", "m", "n", "ŋ", "w", "j", "ʔ"};
    v.tones = {"T1", "T2", "T3", "T4", "T5", "T6", "TRI"};
    return v;
  }();
  return inv;
}

// ---------------------------------------------------------------------------
// PhoneticSyllable

struct PhoneticSyllable {
  std::vector<std::string> onset;  // 1 or 2 phonemes
  std::string nucleus;
  std::string coda;  // empty = open
  std::string tone;

  friend bool operator==(const PhoneticSyllable& a, const PhoneticSyllable& b) {
    return a.onset == b.onset && a.nucleus == b.nucleus && a.coda == b.coda && a.tone == b.tone;
  }
};

using Pronunciation = std::vector<PhoneticSyllable>;

inline std::string to_string(const PhoneticSyllable& s) {
  std::string out = join(s.onset, " ");
  out += " " + s.nucleus;
  if (!s.coda.empty()) out += " " + s.coda;
  out += " " + s.tone;
  return out;
}

inline std::string to_string(const Pronunciation& p) {
  std::vector<std::string> syls;
  for (const auto& s : p) syls.push_back(to_string(s));
  return join(syls, " . ");
}

inline PhoneticSyllable parse_phonetic_syllable(std::string_view text) {
  const auto& inv = phoneme_inventory();
  std::vector<std::string> tokens;
  for (auto& t : split(text, ' '))
    if (!t.empty()) tokens.push_back(t);
  if (tokens.size() < 3)
    raise(errc::invalid_pronunciation, "expected onset(s), nucleus, tone: \"" +
                                           std::string(text) + "\"");
  PhoneticSyllable s;
  s.tone = tokens.back();
  tokens.pop_back();
  if (!inv.is_tone(s.tone))
    raise(errc::invalid_pronunciation, "unknown tone " + s.tone);
  size_t i = 0;
  s.onset.push_back(tokens[i++]);
  if (i + 1 < tokens.size() && inv.is_onset(tokens[i]) && !inv.is_vowel(tokens[i]))
    s.onset.push_back(tokens[i++]);
  if (i >= tokens.size())
    raise(errc::invalid_pronunciation, "missing nucleus in \"" + std::string(text) + "\"");
  s.nucleus = tokens[i++];
  if (i < tokens.size()) s.coda = tokens[i++];
  if (i < tokens.size())
    raise(errc::invalid_pronunciation, "trailing tokens in \"" + std::string(text) + "\"");
  return s;
}

inline Pronunciation parse_pronunciation(std::string_view text) {
  Pronunciation out;
  size_t begin = 0;
  std::string s(text);
  while (true) {
    size_t pos = s.find(" . ", begin);
    if (pos == std::string::npos) {
      out.push_back(parse_phonetic_syllable(std::string_view(s).substr(begin)));
      break;
    }
    out.push_back(parse_phonetic_syllable(std::string_view(s).substr(begin, pos - begin)));
    begin = pos + 3;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Phonotactics

struct PhonotacticViolation {
  std::string code;
  std::string message;
};

inline std::vector<PhonotacticViolation> validate_phonotactics(const PhoneticSyllable& s) {
  const auto& inv = phoneme_inventory();
  std::vector<PhonotacticViolation> out;
  auto flag = [&](const char* code, std::string msg) { out.push_back({code, std::move(msg)}); };

  if (s.onset.empty() || s.onset.size() > 2)
    flag("onset-count", "syllable must have 1-2 onset phonemes");
  for (const auto& p : s.onset) {
    if (p == "r") {
      flag("r-phoneme", "no /r/ in the inventory");
    } else if (!inv.is_onset(p)) {
      flag("bad-onset", "unknown onset phoneme " + p);
    }
  }
  if (s.onset.size() == 2 && !(s.onset[0] == "kʰ" && s.onset[1] == "w"))
    flag("bad-cluster", "only the /kʰw/ cluster is permitted");
  if (!inv.is_vowel(s.nucleus)) flag("bad-nucleus", "unknown vowel " + s.nucleus);
  if (!s.coda.empty()) {
    if (s.coda == "r")
      flag("r-phoneme", "no /r/ in the inventory");
    else if (!inv.is_coda(s.coda))
      flag("bad-coda", "coda outside the coda inventory: " + s.coda);
    if (s.coda == "ʔ" && inv.is_vowel(s.nucleus) && !inv.is_short_vowel(s.nucleus))
      flag("glottal-long", "glottal coda occurs only after short vowels");
  } else if (inv.is_vowel(s.nucleus) && inv.is_short_vowel(s.nucleus)) {
    flag("short-open", "short vowels require a coda");
  }
  if (!inv.is_tone(s.tone)) flag("no-tone", "missing or unknown tone label");
  return out;
}

// ---------------------------------------------------------------------------
// Letter-to-phoneme mapping

struct PhonemizeHints {
  std::optional<std::string> r_onset;   // ร: "h" (default) or "l"
  std::optional<std::string> y_onset;   // ย: "j" (default) or "ɲ"
  std::optional<std::string> ch_onset;  // ช ฉ ฌ: "s" (default) or "tɕʰ"
  bool keep_kw = false;                 // keep the ว cluster on whitelisted words
  std::optional<std::string> tone;      // lexical tone override (loans, homographs)
  std::optional<std::string> nucleus;   // lexical vowel override (variants)
  std::optional<std::string> final_coda;  // foreign final consonant, adapted via the coda map

  static PhonemizeHints from_entry(const LexiconEntry& e, size_t variant) {
    PhonemizeHints h;
    h.r_onset = e.hint("r", variant);
    h.y_onset = e.hint("y", variant);
    h.ch_onset = e.hint("ch", variant);
    if (auto kw = e.hint("kw", variant)) h.keep_kw = *kw == "keep";
    h.tone = e.hint("tone", variant);
    h.nucleus = e.hint("nucleus", variant);
    h.final_coda = e.hint("final", variant);
    return h;
  }
};

inline std::string onset_phoneme_of_letter(char32_t c, const PhonemizeHints& hints) {
  switch (c) {
    case U'ก': return "k";
    case U'ข': case U'ฃ': case U'ค': case U'ฅ': case U'ฆ': return "kʰ";
    case U'ง': return "ŋ";
    case U'จ': return "tɕ";
    case U'ฉ': case U'ช': case U'ฌ': return hints.ch_onset.value_or("s");
    case U'ซ': case U'ศ': case U'ษ': case U'ส': return "s";
    case U'ญ': return "ɲ";
    case U'ฎ': case U'ด': return "d";
    case U'ฏ': case U'ต': return "t";
    case U'ฐ': case U'ฑ': case U'ฒ': case U'ถ': case U'ท': case U'ธ': return "tʰ";
    case U'ณ': case U'น': return "n";
    case U'บ': return "b";
    case U'ป': return "p";
    case U'ผ': case U'พ': case U'ภ': return "pʰ";
    case U'ฝ': case U'ฟ': return "f";
    case U'ม': return "m";
    case U'ย': return hints.y_onset.value_or("j");
    case U'ร': return hints.r_onset.value_or("h");
    case U'ล': case U'ฬ': return "l";
    case U'ว': return "w";
    case U'ห': case U'ฮ': return "h";
    case U'อ': return "ʔ";
    default:
      raise(errc::unmappable_letter, "no onset phoneme for letter " + utf8_encode(c));
  }
}

inline std::string coda_phoneme(CodaSound c) {
  switch (c) {
    case CodaSound::M: return "m";
    case CodaSound::N: return "n";
    case CodaSound::Ng: return "ŋ";
    case CodaSound::J: return "j";
    case CodaSound::W: return "w";
    case CodaSound::P: return "p̚";
    case CodaSound::T: return "t̚";
    case CodaSound::K: return "k̚";
    case CodaSound::Glottal: return "ʔ";
    case CodaSound::None: return "";
  }
  return "";
}

// ---------------------------------------------------------------------------
// G2p converter

class G2p {
 public:
  G2p()
      : box_(isan_tone_box()),
        kw_whitelist_{"ขวิด", "เคว้ง", "คว้าง"},
        foreign_coda_{{"l", "n"}, {"r", "n"}, {"s", "t̚"}, {"f", "p̚"}, {"tɕʰ", "t̚"}} {}

  void set_tone_box(ToneBox box) { box_ = std::move(box); }
  const ToneBox& tone_box() const { return box_; }
  void set_kw_whitelist(std::set<std::string> words) { kw_whitelist_ = std::move(words); }
  const std::set<std::string>& kw_whitelist() const { return kw_whitelist_; }
  void set_foreign_coda_map(std::map<std::string, std::string> m) {
    foreign_coda_ = std::move(m);
  }

  // Adapts a foreign final consonant to the coda inventory (บอล: l -> n).
  std::string adapt_foreign_coda(const std::string& coda) const {
    if (phoneme_inventory().is_coda(coda)) return coda;
    auto it = foreign_coda_.find(coda);
    if (it == foreign_coda_.end())
      raise(errc::unmappable_letter, "no coda adaptation for " + coda);
    return it->second;
  }

  // Citation form of one orthographic syllable. The tone comes from the tone
  // box unless a lexical hint overrides it.
  PhoneticSyllable phonemize_syllable(const OrthoSyllable& s,
                                      const PhonemizeHints& hints = {}) const {
    const auto& info = vowel_pattern_info(s.vowel_pattern);
    PhoneticSyllable out;
    std::optional<std::string> nucleus_override;

    if (s.cluster_letter != 0 && !s.false_cluster) {
      std::string first = onset_phoneme_of_letter(s.onset_letter, hints);
      if (s.cluster_letter == U'ว') {
        bool keep = hints.keep_kw || kw_whitelist_.count(render_syllable(s)) > 0;
        if (keep) {
          out.onset = {first, "w"};
        } else if (s.vowel_pattern == VowelPattern::A || s.vowel_pattern == VowelPattern::AA) {
          // ความ-type absorption: the glide folds into an อัว nucleus.
          out.onset = {first};
          nucleus_override = "ua";
        } else {
          // เกวียน-type: the glide drops before other vowels.
          out.onset = {first};
        }
      } else {
        // No liquid clusters: ปราบ reduces to its first consonant.
        out.onset = {first};
      }
    } else if (s.false_cluster) {
      out.onset = {s.onset_letter == U'ท' ? "s" : onset_phoneme_of_letter(s.onset_letter, hints)};
    } else {
      out.onset = {onset_phoneme_of_letter(s.onset_letter, hints)};
    }

    if (hints.nucleus)
      out.nucleus = *hints.nucleus;
    else if (nucleus_override)
      out.nucleus = *nucleus_override;
    else
      out.nucleus = std::string(info.nucleus);

    if (hints.final_coda) {
      out.coda = adapt_foreign_coda(*hints.final_coda);
    } else {
      CodaSound cs = s.coda_letter != 0 ? coda_sound_of_letter(s.coda_letter) : info.implied_coda;
      out.coda = coda_phoneme(cs);
    }
    if (out.coda.empty() && phoneme_inventory().is_short_vowel(out.nucleus))
      out.coda = "ʔ";  // short vowels always take a coda

    out.tone = hints.tone ? *hints.tone : compute_isan_tone(s, box_).label;

    auto violations = validate_phonotactics(out);
    if (!violations.empty())
      raise(errc::phonotactic_violation,
            "phonemization of \"" + render_syllable(s) + "\" violates " + violations[0].code);
    return out;
  }

  PhoneticSyllable phonemize_syllable(const std::string& syllable_text,
                                      const PhonemizeHints& hints = {}) const {
    return phonemize_syllable(parse_syllable(syllable_text), hints);
  }

  // Citation pronunciation of a simple word: per-syllable forms, no
  // cross-syllable adjustment. Undelimited multi-syllable words must come
  // with a lexicon syllabification.
  Pronunciation phonemize_entry(const LexiconEntry& entry, size_t variant = 0) const {
    if (auto pron = entry.hint("pron", variant)) return parse_pronunciation(*pron);
    PhonemizeHints hints = PhonemizeHints::from_entry(entry, variant);
    std::vector<std::string> syllables =
        entry.syllables.empty() ? std::vector<std::string>{entry.headword} : entry.syllables;
    Pronunciation out;
    for (const auto& syl : syllables) {
      // Lexical tone overrides apply to the whole (single-syllable) word, not
      // to every syllable of a longer one.
      PhonemizeHints h = hints;
      if (syllables.size() > 1) h.tone.reset();
      out.push_back(phonemize_syllable(syl, h));
    }
    return out;
  }

  Pronunciation phonemize_word(const std::string& word, const Lexicon& lexicon,
                               size_t variant = 0) const {
    auto entries = lexicon.lookup(word);
    if (!entries.empty()) return phonemize_entry(*entries.front(), variant);
    if (word.find('-') != std::string::npos) {
      LexiconEntry e;
      e.headword = word;
      e.syllables = split(word, '-');
      return phonemize_entry(e, variant);
    }
    try {
      return {phonemize_syllable(word)};
    } catch (const error& err) {
      if (err.code() == errc::multi_syllable)
        raise(errc::segmentation_required,
              "\"" + word + "\" is not in the lexicon and is not syllable-delimited");
      throw;
    }
  }

 private:
  ToneBox box_;
  std::set<std::string> kw_whitelist_;
  std::map<std::string, std::string> foreign_coda_;
};

// ---------------------------------------------------------------------------
// Pronunciation dictionary

enum class PronRank { Primary, Variant };

inline const char* to_string(PronRank r) { return r == PronRank::Primary ? "P" : "V"; }

struct DictPron {
  Pronunciation phones;
  PronRank rank = PronRank::Primary;

  friend bool operator==(const DictPron& a, const DictPron& b) {
    return a.phones == b.phones && a.rank == b.rank;
  }
};

struct DictEntry {
  std::string headword;
  std::string context;  // homograph tag, empty for plain entries
  WordOrigin origin = WordOrigin::ThaiCognate;
  std::vector<DictPron> prons;  // first is Primary, rest Variant

  friend bool operator==(const DictEntry& a, const DictEntry& b) {
    return a.headword == b.headword && a.context == b.context && a.origin == b.origin &&
           a.prons == b.prons;
  }
};

class DictStore {
 public:
  void add(DictEntry entry) {
    if (entry.prons.empty())
      raise(errc::invalid_pronunciation, entry.headword + ": entry without pronunciations");
    int primaries = 0;
    for (const auto& p : entry.prons) primaries += p.rank == PronRank::Primary ? 1 : 0;
    if (primaries != 1)
      raise(errc::duplicate_primary,
            entry.headword + ": exactly one primary pronunciation required");
    auto key = std::make_pair(entry.headword, entry.context);
    if (index_.count(key))
      raise(errc::duplicate_primary, entry.headword + ": duplicate entry for context \"" +
                                         entry.context + "\"");
    index_[key] = entries_.size();
    entries_.push_back(std::move(entry));
  }

  const std::vector<DictEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  std::vector<const DictEntry*> find(const std::string& headword) const {
    std::vector<const DictEntry*> out;
    for (const auto& e : entries_)
      if (e.headword == headword) out.push_back(&e);
    return out;
  }

  const DictEntry* find(const std::string& headword, const std::string& context) const {
    auto it = index_.find({headword, context});
    return it == index_.end() ? nullptr : &entries_[it->second];
  }

  friend bool operator==(const DictStore& a, const DictStore& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<DictEntry> entries_;
  std::map<std::pair<std::string, std::string>, size_t> index_;
};

struct DictLookup {
  std::vector<const DictEntry*> entries;
  bool ambiguous = false;  // homograph headword queried without a context
};

inline DictLookup lookup(const DictStore& dict, const std::string& headword,
                         const std::optional<std::string>& context = std::nullopt) {
  DictLookup out;
  if (context) {
    const DictEntry* e = dict.find(headword, *context);
    if (!e) raise(errc::not_found, headword + " (context \"" + *context + "\") not in dictionary");
    out.entries = {e};
    return out;
  }
  out.entries = dict.find(headword);
  if (out.entries.empty()) raise(errc::not_found, headword + " not in dictionary");
  out.ambiguous = out.entries.size() > 1;
  return out;
}

// Builds one entry per (headword, context) pair from the lexicon; hint axes
// with several values expand to ranked variants, first value primary.
inline DictStore build_dictionary(const std::vector<std::string>& wordlist,
                                  const Lexicon& lexicon, const G2p& g2p) {
  DictStore store;
  for (const auto& word : wordlist) {
    auto lex_entries = lexicon.lookup(word);
    if (lex_entries.empty()) {
      DictEntry e;
      e.headword = word;
      e.origin = WordOrigin::ThaiCognate;
      e.prons.push_back({g2p.phonemize_word(word, lexicon), PronRank::Primary});
      store.add(std::move(e));
      continue;
    }
    for (const LexiconEntry* le : lex_entries) {
      DictEntry e;
      e.headword = le->headword;
      e.context = le->context;
      e.origin = le->origin;
      size_t n = le->variant_count();
      for (size_t i = 0; i < n; ++i) {
        Pronunciation p = g2p.phonemize_entry(*le, i);
        for (const auto& syl : p)
          if (!validate_phonotactics(syl).empty())
            raise(errc::invalid_pronunciation, le->headword + ": invalid pronunciation");
        DictPron dp{std::move(p), i == 0 ? PronRank::Primary : PronRank::Variant};
        if (std::find(e.prons.begin(), e.prons.end(), dp) == e.prons.end())
          e.prons.push_back(std::move(dp));
      }
      store.add(std::move(e));
    }
  }
  return store;
}

inline constexpr std::string_view k_dict_header = "#isan-dict v1";

inline std::string serialize_dictionary(const DictStore& store) {
  std::string out(k_dict_header);
  out += "\n";
  for (const auto& e : store.entries()) {
    for (const auto& p : e.prons) {
      out += e.headword;
      out += "\t";
      out += e.context.empty() ? "-" : e.context;
      out += "\t";
      out += to_string(p.rank);
      out += "\t";
      out += to_string(p.phones);
      out += "\t";
      out += to_string(e.origin);
      out += "\n";
    }
  }
  return out;
}

inline DictStore parse_dictionary(const TsvFile& tsv, const std::string& origin) {
  bool versioned = false;
  for (const auto& d : tsv.directives)
    if (strip(d) == k_dict_header) versioned = true;
  if (!versioned)
    raise(errc::format_error, origin + ":1: missing \"" + std::string(k_dict_header) + "\" header");

  DictStore store;
  DictEntry current;
  bool open = false;
  auto flush = [&] {
    if (open) store.add(std::move(current));
    current = DictEntry{};
    open = false;
  };
  for (const auto& row : tsv.rows) {
    const std::string where = origin + ":" + std::to_string(row.line_no);
    if (row.fields.size() != 5)
      raise(errc::format_error, where + ": expected 5 columns, got " +
                                    std::to_string(row.fields.size()));
    std::string head = row.fields[0];
    std::string context = row.fields[1] == "-" ? "" : row.fields[1];
    if (head.empty()) raise(errc::format_error, where + ": empty headword");
    PronRank rank;
    if (row.fields[2] == "P")
      rank = PronRank::Primary;
    else if (row.fields[2] == "V")
      rank = PronRank::Variant;
    else
      raise(errc::format_error, where + ": rank must be P or V");
    Pronunciation phones;
    try {
      phones = parse_pronunciation(row.fields[3]);
    } catch (const error& e) {
      raise(errc::format_error, where + ": " + e.what());
    }
    auto o = word_origin_from_string(row.fields[4]);
    if (!o) raise(errc::format_error, where + ": unknown origin " + row.fields[4]);

    if (!open || head != current.headword || context != current.context) {
      flush();
      current.headword = head;
      current.context = context;
      current.origin = *o;
      open = true;
    }
    current.prons.push_back({std::move(phones), rank});
  }
  flush();
  return store;
}

inline DictStore parse_dictionary_file(const std::string& path) {
  return parse_dictionary(read_tsv_file(path), path);
}

}  // namespace isan
