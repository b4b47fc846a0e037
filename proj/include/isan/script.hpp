#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isan/error.hpp"
#include "isan/thai_text.hpp"

// Orthographic syllable model: parse Thai-script syllables into structured
// form and render structured syllables back to canonical spelling. Input is
// one syllable at a time; running-text segmentation is the caller's problem.

namespace isan {

enum class ToneMark { None, MaiEk, MaiTho, MaiTri, MaiChattawa };
enum class VowelLength { Short, Long };
enum class SyllableKind { Live, DeadShort, DeadLong };

inline const char* to_string(ToneMark m) {
  switch (m) {
    case ToneMark::None: return "None";
    case ToneMark::MaiEk: return "MaiEk";
    case ToneMark::MaiTho: return "MaiTho";
    case ToneMark::MaiTri: return "MaiTri";
    case ToneMark::MaiChattawa: return "MaiChattawa";
  }
  return "?";
}

inline std::optional<ToneMark> tone_mark_from_string(std::string_view s) {
  if (s == "None") return ToneMark::None;
  if (s == "MaiEk") return ToneMark::MaiEk;
  if (s == "MaiTho") return ToneMark::MaiTho;
  if (s == "MaiTri") return ToneMark::MaiTri;
  if (s == "MaiChattawa") return ToneMark::MaiChattawa;
  return std::nullopt;
}

inline const char* to_string(VowelLength l) {
  return l == VowelLength::Short ? "Short" : "Long";
}

inline const char* to_string(SyllableKind k) {
  switch (k) {
    case SyllableKind::Live: return "Live";
    case SyllableKind::DeadShort: return "DeadShort";
    case SyllableKind::DeadLong: return "DeadLong";
  }
  return "?";
}

inline std::optional<SyllableKind> syllable_kind_from_string(std::string_view s) {
  if (s == "Live") return SyllableKind::Live;
  if (s == "DeadShort") return SyllableKind::DeadShort;
  if (s == "DeadLong") return SyllableKind::DeadLong;
  return std::nullopt;
}

inline char32_t tone_mark_codepoint(ToneMark m) {
  switch (m) {
    case ToneMark::MaiEk: return U'่';
    case ToneMark::MaiTho: return U'้';
    case ToneMark::MaiTri: return U'๊';
    case ToneMark::MaiChattawa: return U'๋';
    default: return 0;
  }
}

inline ToneMark tone_mark_from_codepoint(char32_t cp) {
  switch (cp) {
    case U'่': return ToneMark::MaiEk;
    case U'้': return ToneMark::MaiTho;
    case U'๊': return ToneMark::MaiTri;
    case U'๋': return ToneMark::MaiChattawa;
    default: return ToneMark::None;
  }
}

// ---------------------------------------------------------------------------
// Vowel grapheme patterns

enum class VowelPattern {
  A, AA, AM, I, II, UE, UEE, U, UU, E, EE, AE, AAE, O, OO,
  AW, AAW, OE, OEE, IA, IA_SHORT, UEA, UA, AI, AI_MUAN, AO, RR,
};

inline const char* vowel_pattern_id(VowelPattern p) {
  switch (p) {
    case VowelPattern::A: return "a";
    case VowelPattern::AA: return "aa";
    case VowelPattern::AM: return "am";
    case VowelPattern::I: return "i";
    case VowelPattern::II: return "ii";
    case VowelPattern::UE: return "ue";
    case VowelPattern::UEE: return "uee";
    case VowelPattern::U: return "u";
    case VowelPattern::UU: return "uu";
    case VowelPattern::E: return "e";
    case VowelPattern::EE: return "ee";
    case VowelPattern::AE: return "ae";
    case VowelPattern::AAE: return "aae";
    case VowelPattern::O: return "o";
    case VowelPattern::OO: return "oo";
    case VowelPattern::AW: return "aw";
    case VowelPattern::AAW: return "aaw";
    case VowelPattern::OE: return "oe";
    case VowelPattern::OEE: return "oee";
    case VowelPattern::IA: return "ia";
    case VowelPattern::IA_SHORT: return "ia_short";
    case VowelPattern::UEA: return "uea";
    case VowelPattern::UA: return "ua";
    case VowelPattern::AI: return "ai";
    case VowelPattern::AI_MUAN: return "ai_muan";
    case VowelPattern::AO: return "ao";
    case VowelPattern::RR: return "rr";
  }
  return "?";
}

inline std::optional<VowelPattern> vowel_pattern_from_id(std::string_view id) {
  using VP = VowelPattern;
  static const std::pair<std::string_view, VP> table[] = {
      {"a", VP::A}, {"aa", VP::AA}, {"am", VP::AM}, {"i", VP::I}, {"ii", VP::II},
      {"ue", VP::UE}, {"uee", VP::UEE}, {"u", VP::U}, {"uu", VP::UU}, {"e", VP::E},
      {"ee", VP::EE}, {"ae", VP::AE}, {"aae", VP::AAE}, {"o", VP::O}, {"oo", VP::OO},
      {"aw", VP::AW}, {"aaw", VP::AAW}, {"oe", VP::OE}, {"oee", VP::OEE}, {"ia", VP::IA},
      {"ia_short", VP::IA_SHORT}, {"uea", VP::UEA}, {"ua", VP::UA}, {"ai", VP::AI},
      {"ai_muan", VP::AI_MUAN}, {"ao", VP::AO}, {"rr", VP::RR},
  };
  for (auto& [k, v] : table)
    if (k == id) return v;
  return std::nullopt;
}

struct VowelPatternInfo {
  VowelPattern pattern;
  VowelLength length;
  // Nucleus phoneme in the transcription alphabet (g2p consumes this).
  std::string_view nucleus;
  // Coda sound supplied by the grapheme itself (ำ ไ ใ เ-า, open -รร-).
  CodaSound implied_coda;
};

inline const VowelPatternInfo& vowel_pattern_info(VowelPattern p) {
  using VP = VowelPattern;
  using VL = VowelLength;
  static const VowelPatternInfo table[] = {
      {VP::A, VL::Short, "a", CodaSound::None},
      {VP::AA, VL::Long, "aː", CodaSound::None},
      {VP::AM, VL::Short, "a", CodaSound::M},
      {VP::I, VL::Short, "i", CodaSound::None},
      {VP::II, VL::Long, "iː", CodaSound::None},
      {VP::UE, VL::Short, "ɯ", CodaSound::None},
      {VP::UEE, VL::Long, "ɯː", CodaSound::None},
      {VP::U, VL::Short, "u", CodaSound::None},
      {VP::UU, VL::Long, "uː", CodaSound::None},
      {VP::E, VL::Short, "e", CodaSound::None},
      {VP::EE, VL::Long, "eː", CodaSound::None},
      {VP::AE, VL::Short, "ɛ", CodaSound::None},
      {VP::AAE, VL::Long, "ɛː", CodaSound::None},
      {VP::O, VL::Short, "o", CodaSound::None},
      {VP::OO, VL::Long, "oː", CodaSound::None},
      {VP::AW, VL::Short, "ɔ", CodaSound::None},
      {VP::AAW, VL::Long, "ɔː", CodaSound::None},
      {VP::OE, VL::Short, "ɤ", CodaSound::None},
      {VP::OEE, VL::Long, "ɤː", CodaSound::None},
      {VP::IA, VL::Long, "ia", CodaSound::None},
      {VP::IA_SHORT, VL::Short, "ia", CodaSound::None},
      {VP::UEA, VL::Long, "ɯa", CodaSound::None},
      {VP::UA, VL::Long, "ua", CodaSound::None},
      {VP::AI, VL::Short, "a", CodaSound::J},
      {VP::AI_MUAN, VL::Short, "a", CodaSound::J},
      {VP::AO, VL::Short, "a", CodaSound::W},
      {VP::RR, VL::Short, "a", CodaSound::N},
  };
  return table[static_cast<size_t>(p)];
}

// One written form of a vowel pattern. A pattern may have distinct open,
// closed and unreduced (non-canonical, flagged) spellings.
struct VowelForm {
  VowelPattern pattern;
  char32_t prefix;        // เ แ โ ใ ไ or 0
  char32_t sign;          // above/below sign or 0
  std::u32string_view trail;  // letters between the sign slot and the coda
  enum class Coda { Forbidden, Required, Optional } coda;
  bool unreduced = false;
};

inline const std::vector<VowelForm>& vowel_forms() {
  using VP = VowelPattern;
  using C = VowelForm::Coda;
  static const std::vector<VowelForm> forms = {
      // bare (no preposed letter, no sign)
      {VP::RR, 0, 0, U"รร", C::Optional},
      {VP::AA, 0, 0, U"า", C::Optional},
      {VP::AM, 0, 0, U"ำ", C::Forbidden},
      {VP::AAW, 0, 0, U"อ", C::Optional},
      {VP::UA, 0, 0, U"ว", C::Required},
      {VP::A, 0, 0, U"ะ", C::Forbidden},
      {VP::A, 0, 0, U"ะ", C::Required, true},
      {VP::O, 0, 0, U"", C::Required},  // implicit โ-ะ
      // signed, no preposed letter
      {VP::UA, 0, U'ั', U"ว", C::Forbidden},
      {VP::UA, 0, U'ั', U"ว", C::Required, true},
      {VP::A, 0, U'ั', U"", C::Required},
      {VP::I, 0, U'ิ', U"", C::Optional},
      {VP::II, 0, U'ี', U"", C::Optional},
      {VP::UE, 0, U'ึ', U"", C::Optional},
      {VP::UEE, 0, U'ื', U"อ", C::Forbidden},
      {VP::UEE, 0, U'ื', U"", C::Required},
      {VP::U, 0, U'ุ', U"", C::Optional},
      {VP::UU, 0, U'ู', U"", C::Optional},
      {VP::AW, 0, U'็', U"อ", C::Required},
      // เ-
      {VP::AW, U'เ', 0, U"าะ", C::Forbidden},
      {VP::AW, U'เ', 0, U"าะ", C::Required, true},
      {VP::OE, U'เ', 0, U"อะ", C::Forbidden},
      {VP::AO, U'เ', 0, U"า", C::Forbidden},
      {VP::OEE, U'เ', U'ิ', U"", C::Required},  // canonical closed เออ (เกิด)
      {VP::OEE, U'เ', 0, U"อ", C::Optional},
      {VP::E, U'เ', 0, U"ะ", C::Forbidden},
      {VP::E, U'เ', 0, U"ะ", C::Required, true},
      {VP::EE, U'เ', 0, U"", C::Optional},
      {VP::E, U'เ', U'็', U"", C::Required},
      {VP::IA_SHORT, U'เ', U'ี', U"ยะ", C::Forbidden},
      {VP::IA, U'เ', U'ี', U"ย", C::Optional},
      {VP::UEA, U'เ', U'ื', U"อ", C::Optional},
      // แ-
      {VP::AE, U'แ', 0, U"ะ", C::Forbidden},
      {VP::AE, U'แ', 0, U"ะ", C::Required, true},
      {VP::AAE, U'แ', 0, U"", C::Optional},
      {VP::AE, U'แ', U'็', U"", C::Required},
      // โ- ไ- ใ-
      {VP::O, U'โ', 0, U"ะ", C::Forbidden},
      {VP::OO, U'โ', 0, U"", C::Optional},
      {VP::AI, U'ไ', 0, U"", C::Forbidden},
      {VP::AI_MUAN, U'ใ', 0, U"", C::Forbidden},
  };
  return forms;
}

// ---------------------------------------------------------------------------
// OrthoSyllable

struct OrthoSyllable {
  char32_t onset_letter = 0;
  char32_t cluster_letter = 0;  // second letter of a written cluster, or 0
  bool leading_ho = false;      // silent ห before a low sonorant
  bool leading_o = false;       // silent อ before ย (อย่า อยู่ อย่าง อยาก)
  bool false_cluster = false;   // ทร ศร สร ซร จร spellings
  VowelPattern vowel_pattern = VowelPattern::A;
  VowelLength vowel_length = VowelLength::Short;
  char32_t coda_letter = 0;
  ToneMark tone_mark = ToneMark::None;
  bool unreduced_vowel = false;   // written with the mandatory reduction missing
  std::u32string tail_raw;        // verbatim post-vowel text when it carries garan'd letters
  std::string source_text;        // original input (parse only)

  friend bool operator==(const OrthoSyllable& a, const OrthoSyllable& b) {
    return a.onset_letter == b.onset_letter && a.cluster_letter == b.cluster_letter &&
           a.leading_ho == b.leading_ho && a.leading_o == b.leading_o &&
           a.false_cluster == b.false_cluster && a.vowel_pattern == b.vowel_pattern &&
           a.vowel_length == b.vowel_length && a.coda_letter == b.coda_letter &&
           a.tone_mark == b.tone_mark && a.unreduced_vowel == b.unreduced_vowel;
  }
};

// Class that conditions tone: leading ห lifts sonorants to High, leading อ
// gives Mid, written clusters follow their first letter.
inline ConsonantClass effective_class(const OrthoSyllable& s) {
  if (s.leading_ho) return ConsonantClass::High;
  if (s.leading_o) return ConsonantClass::Mid;
  return consonant_class(s.onset_letter);
}

inline CodaSound coda_sound(const OrthoSyllable& s) {
  if (s.coda_letter != 0) return coda_sound_of_letter(s.coda_letter);
  return vowel_pattern_info(s.vowel_pattern).implied_coda;
}

inline SyllableKind syllable_kind(const OrthoSyllable& s) {
  CodaSound c = s.coda_letter != 0 ? coda_sound_of_letter(s.coda_letter)
                                   : vowel_pattern_info(s.vowel_pattern).implied_coda;
  if (c != CodaSound::None) {
    if (coda_is_stop(c))
      return s.vowel_length == VowelLength::Long ? SyllableKind::DeadLong
                                                 : SyllableKind::DeadShort;
    return SyllableKind::Live;
  }
  return s.vowel_length == VowelLength::Long ? SyllableKind::Live : SyllableKind::DeadShort;
}

// ---------------------------------------------------------------------------
// Cluster tables

inline bool is_true_cluster(char32_t c1, char32_t c2) {
  switch (c2) {
    case U'ร':
      switch (c1) {
        case U'ก': case U'ข': case U'ค': case U'ต': case U'ป':
        case U'พ': case U'บ': case U'ฟ': case U'ด':
          return true;
        default: return false;
      }
    case U'ล':
      switch (c1) {
        case U'ก': case U'ข': case U'ค': case U'ป': case U'ผ':
        case U'พ': case U'บ': case U'ฟ':
          return true;
        default: return false;
      }
    case U'ว':
      return c1 == U'ก' || c1 == U'ข' || c1 == U'ค';
    default:
      return false;
  }
}

inline bool is_false_cluster(char32_t c1, char32_t c2) {
  if (c2 != U'ร') return false;
  return c1 == U'จ' || c1 == U'ซ' || c1 == U'ศ' || c1 == U'ส' || c1 == U'ท';
}

// ---------------------------------------------------------------------------
// parse_syllable

namespace detail {

struct SyllableScan {
  char32_t sign = 0;       // at most one vowel sign per syllable
  ToneMark tone = ToneMark::None;
  std::u32string rest;     // trail + coda + silent tail
};

// Collects the combining run after the onset group, then the linear rest.
// Returns false on structural garbage (two signs, garan inside the run).
inline bool scan_after_onset(const std::u32string& cps, size_t i, SyllableScan& out) {
  out = SyllableScan{};
  while (i < cps.size() && (is_vowel_sign(cps[i]) || is_tone_mark_cp(cps[i]))) {
    if (is_tone_mark_cp(cps[i])) {
      if (out.tone != ToneMark::None) return false;
      out.tone = tone_mark_from_codepoint(cps[i]);
    } else {
      if (out.sign != 0) return false;
      out.sign = cps[i];
    }
    ++i;
  }
  out.rest.assign(cps, i);
  return true;
}

struct RestScan {
  char32_t coda = 0;
  std::u32string tail_raw;   // nonempty only when garan'd units are present
  bool multi = false;        // leftover looks like the start of another syllable
  bool ok = false;
};

// Splits what follows the vowel trail into at most one sounding coda unit
// plus silenced (garan) units.
inline RestScan scan_rest(std::u32string_view rest) {
  RestScan r;
  if (rest.empty()) {
    r.ok = true;
    return r;
  }
  std::u32string raw;
  int sounding = 0;
  size_t i = 0;
  bool any_silent = false;
  while (i < rest.size()) {
    if (!is_thai_consonant(rest[i])) {
      r.multi = true;
      return r;
    }
    char32_t letter = rest[i];
    size_t begin = i;
    ++i;
    bool silent = false;
    bool has_sign = false;
    while (i < rest.size() && (is_vowel_sign(rest[i]) || rest[i] == k_thanthakhat)) {
      if (rest[i] == k_thanthakhat) silent = true;
      has_sign |= is_vowel_sign(rest[i]);
      ++i;
    }
    if (is_tone_mark_cp(i < rest.size() ? rest[i] : 0)) {
      r.multi = true;
      return r;
    }
    if (has_sign && !silent) {
      // A vowel sign on a sounding letter starts another syllable (ฤดี).
      r.multi = true;
      return r;
    }
    if (!silent) {
      ++sounding;
      if (sounding > 1) {
        r.multi = true;
        return r;
      }
      r.coda = letter;
    } else {
      any_silent = true;
    }
    raw.append(rest.substr(begin, i - begin));
  }
  if (any_silent) r.tail_raw = raw;
  r.ok = true;
  return r;
}

}  // namespace detail

inline std::optional<OrthoSyllable> try_parse_body(const std::u32string& cps, char32_t prefix,
                                                   size_t i, char32_t onset, char32_t cluster,
                                                   bool ho, bool o_nam, bool false_cl,
                                                   bool& saw_multi) {
  detail::SyllableScan scan;
  if (!detail::scan_after_onset(cps, i, scan)) return std::nullopt;

  // Candidate forms for this (prefix, sign) pair, longest trail first.
  std::vector<const VowelForm*> candidates;
  for (const auto& f : vowel_forms())
    if (f.prefix == prefix && f.sign == scan.sign) candidates.push_back(&f);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const VowelForm* a, const VowelForm* b) {
                     return a->trail.size() > b->trail.size();
                   });

  for (const VowelForm* f : candidates) {
    if (scan.rest.size() < f->trail.size() ||
        std::u32string_view(scan.rest).substr(0, f->trail.size()) != f->trail)
      continue;
    auto rest = std::u32string_view(scan.rest).substr(f->trail.size());
    detail::RestScan rs = detail::scan_rest(rest);
    if (!rs.ok) {
      if (rs.multi) saw_multi = true;
      continue;
    }
    bool has_coda = rs.coda != 0;
    if (has_coda && f->coda == VowelForm::Coda::Forbidden) continue;
    if (!has_coda && f->coda == VowelForm::Coda::Required) continue;

    OrthoSyllable s;
    s.onset_letter = onset;
    s.cluster_letter = cluster;
    s.leading_ho = ho;
    s.leading_o = o_nam;
    s.false_cluster = false_cl;
    s.vowel_pattern = f->pattern;
    if (s.vowel_pattern == VowelPattern::EE && rs.coda == U'ย')
      s.vowel_pattern = VowelPattern::OEE;  // เCย spells เออ, not เอ
    s.vowel_length = vowel_pattern_info(s.vowel_pattern).length;
    s.coda_letter = rs.coda;
    s.tone_mark = scan.tone;
    s.unreduced_vowel = f->unreduced;
    s.tail_raw = rs.tail_raw;
    return s;
  }
  return std::nullopt;
}

inline OrthoSyllable parse_syllable(std::string_view text) {
  std::u32string cps = normalize_thai(utf8_decode(text));
  if (cps.empty()) raise(errc::not_a_syllable, "empty input");
  for (char32_t cp : cps)
    if (!is_thai(cp)) raise(errc::non_thai, "non-Thai codepoint in \"" + std::string(text) + "\"");

  int marks = 0;
  for (char32_t cp : cps)
    if (is_tone_mark_cp(cp)) ++marks;
  if (marks > 1) raise(errc::multi_syllable, "more than one tone mark in \"" + std::string(text) + "\"");

  size_t i = 0;
  char32_t prefix = 0;
  if (is_preposed_vowel(cps[0])) {
    prefix = cps[0];
    i = 1;
  }
  if (i >= cps.size() || !is_thai_consonant(cps[i]))
    raise(errc::not_a_syllable, "no onset consonant in \"" + std::string(text) + "\"");
  char32_t c1 = cps[i];
  ++i;

  bool saw_multi = false;

  // Leading ห / leading อ readings take priority, falling back to a plain
  // onset when the remainder does not complete a syllable (e.g. ผม-like หม).
  if (c1 == U'ห' && i < cps.size() && is_ho_nam_target(cps[i])) {
    if (auto s = try_parse_body(cps, prefix, i + 1, cps[i], 0, true, false, false, saw_multi)) {
      s->source_text = utf8_encode(cps);
      return *s;
    }
  }
  if (c1 == U'อ' && i < cps.size() && cps[i] == U'ย') {
    if (auto s = try_parse_body(cps, prefix, i + 1, U'ย', 0, false, true, false, saw_multi)) {
      s->source_text = utf8_encode(cps);
      return *s;
    }
  }
  if (i < cps.size() && is_thai_consonant(cps[i]) &&
      (is_true_cluster(c1, cps[i]) || is_false_cluster(c1, cps[i]))) {
    bool take = true;
    if (cps[i] == U'ร' && i + 1 < cps.size() && cps[i + 1] == U'ร')
      take = false;  // Cรร is the -รร- vowel, not a cluster
    if (cps[i] == U'ว' && prefix == 0) {
      // Bare Cว + coda is the reduced อัว vowel (สวน), not a cluster; a ว
      // cluster needs a following vowel grapheme (ควาย, กว่า, ขวัญ).
      size_t k = i + 1;
      while (k < cps.size() && is_tone_mark_cp(cps[k])) ++k;
      take = k < cps.size() && (is_vowel_sign(cps[k]) || is_trailing_vowel(cps[k]));
    }
    if (take) {
      bool false_cl = is_false_cluster(c1, cps[i]);
      if (auto s = try_parse_body(cps, prefix, i + 1, c1, cps[i], false, false, false_cl,
                                  saw_multi)) {
        s->source_text = utf8_encode(cps);
        return *s;
      }
    }
  }
  if (auto s = try_parse_body(cps, prefix, i, c1, 0, false, false, false, saw_multi)) {
    s->source_text = utf8_encode(cps);
    return *s;
  }
  if (saw_multi)
    raise(errc::multi_syllable, "\"" + std::string(text) + "\" contains more than one syllable");
  raise(errc::not_a_syllable, "cannot parse \"" + std::string(text) + "\" as a Thai syllable");
}

// ---------------------------------------------------------------------------
// render_syllable

inline std::string render_syllable(const OrthoSyllable& s) {
  bool has_coda = s.coda_letter != 0 || !s.tail_raw.empty();

  // Pick the canonical written form: reduced, matching coda presence. A form
  // with optional coda matches either way.
  const VowelForm* chosen = nullptr;
  for (const auto& f : vowel_forms()) {
    if (f.pattern != s.vowel_pattern || f.unreduced) continue;
    if (has_coda && f.coda == VowelForm::Coda::Forbidden) continue;
    if (!has_coda && f.coda == VowelForm::Coda::Required) continue;
    chosen = &f;
    break;
  }
  if (s.vowel_pattern == VowelPattern::OEE && s.coda_letter == U'ย' && s.tail_raw.empty()) {
    // เลย-style: no sign, no trail.
    static const VowelForm oee_j{VowelPattern::OEE, U'เ', 0, U"", VowelForm::Coda::Required};
    chosen = &oee_j;
  }
  if (s.vowel_pattern == VowelPattern::EE && s.coda_letter == U'ย')
    raise(errc::unrenderable, "เ-ย spells the เออ pattern");
  if (!chosen)
    raise(errc::unrenderable, std::string("no written form for pattern ") +
                                  vowel_pattern_id(s.vowel_pattern) +
                                  (has_coda ? " with coda" : " without coda"));
  if (s.tone_mark != ToneMark::None && chosen->sign == U'็')
    raise(errc::unrenderable, "mai taikhu cannot carry a tone mark");
  if (s.cluster_letter == U'ว' && chosen->prefix == 0 && chosen->sign == 0 &&
      !(!chosen->trail.empty() && is_trailing_vowel(chosen->trail[0])))
    raise(errc::unrenderable, "a ว cluster needs a following vowel grapheme");
  if (s.leading_ho && !is_ho_nam_target(s.onset_letter))
    raise(errc::unrenderable, "leading ho requires a low-class sonorant onset");
  if (s.leading_o && s.onset_letter != U'ย')
    raise(errc::unrenderable, "leading อ occurs only before ย");

  std::u32string out;
  if (chosen->prefix != 0) out.push_back(chosen->prefix);
  if (s.leading_ho) out.push_back(U'ห');
  if (s.leading_o) out.push_back(U'อ');
  out.push_back(s.onset_letter);
  if (s.cluster_letter != 0) out.push_back(s.cluster_letter);
  if (chosen->sign != 0) out.push_back(chosen->sign);
  if (s.tone_mark != ToneMark::None) out.push_back(tone_mark_codepoint(s.tone_mark));
  out.append(chosen->trail);
  if (!s.tail_raw.empty())
    out.append(s.tail_raw);
  else if (s.coda_letter != 0)
    out.push_back(s.coda_letter);
  return utf8_encode(out);
}

}  // namespace isan
