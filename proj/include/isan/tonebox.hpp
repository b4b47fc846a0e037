#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isan/error.hpp"
#include "isan/script.hpp"
#include "isan/tsv.hpp"

// Gedney tone boxes: a 4-row x 5-column grid mapping (initial-consonant
// class, tone mark / syllable kind) to tone-category labels. Shipped boxes:
// the Central Thai 5-tone system and the 6-tone Isan system. Boxes are data
// and can be loaded from TSV for other dialects.

namespace isan {

enum class ToneRow { HighRow, MidPlainRow, MidGlottalRow, LowRow };
enum class ToneColumn { NoMark, MaiEk, MaiTho, DeadLong, DeadShort };

inline constexpr std::array<ToneRow, 4> k_all_rows = {
    ToneRow::HighRow, ToneRow::MidPlainRow, ToneRow::MidGlottalRow, ToneRow::LowRow};
inline constexpr std::array<ToneColumn, 5> k_all_columns = {
    ToneColumn::NoMark, ToneColumn::MaiEk, ToneColumn::MaiTho, ToneColumn::DeadLong,
    ToneColumn::DeadShort};

inline const char* to_string(ToneRow r) {
  switch (r) {
    case ToneRow::HighRow: return "High";
    case ToneRow::MidPlainRow: return "MidPlain";
    case ToneRow::MidGlottalRow: return "MidGlottal";
    case ToneRow::LowRow: return "Low";
  }
  return "?";
}

inline const char* to_string(ToneColumn c) {
  switch (c) {
    case ToneColumn::NoMark: return "NoMark";
    case ToneColumn::MaiEk: return "MaiEk";
    case ToneColumn::MaiTho: return "MaiTho";
    case ToneColumn::DeadLong: return "DeadLong";
    case ToneColumn::DeadShort: return "DeadShort";
  }
  return "?";
}

inline std::optional<ToneRow> tone_row_from_string(std::string_view s) {
  if (s == "High") return ToneRow::HighRow;
  if (s == "MidPlain") return ToneRow::MidPlainRow;
  if (s == "MidGlottal") return ToneRow::MidGlottalRow;
  if (s == "Low") return ToneRow::LowRow;
  return std::nullopt;
}

inline std::optional<ToneColumn> tone_column_from_string(std::string_view s) {
  if (s == "NoMark") return ToneColumn::NoMark;
  if (s == "MaiEk") return ToneColumn::MaiEk;
  if (s == "MaiTho") return ToneColumn::MaiTho;
  if (s == "DeadLong") return ToneColumn::DeadLong;
  if (s == "DeadShort") return ToneColumn::DeadShort;
  return std::nullopt;
}

struct ToneCategory {
  std::string label;
  std::string contour;  // opaque annotation, never computed on

  friend bool operator==(const ToneCategory& a, const ToneCategory& b) {
    return a.label == b.label;
  }
};

// A 4x5 grid of labels. Every cell must be populated.
struct ToneBox {
  std::string name;
  // Central Thai orthography puts tone marks on some dead syllables (ค่ะ);
  // a tolerant box resolves them through the dead column instead of failing.
  bool tolerate_dead_marks = false;
  std::array<std::array<std::string, 5>, 4> cells{};
  std::map<std::string, std::string> contours;

  const std::string& cell(ToneRow r, ToneColumn c) const {
    return cells[static_cast<size_t>(r)][static_cast<size_t>(c)];
  }
  std::string& cell(ToneRow r, ToneColumn c) {
    return cells[static_cast<size_t>(r)][static_cast<size_t>(c)];
  }

  std::vector<std::string> distinct_labels() const {
    std::vector<std::string> out;
    for (auto& row : cells)
      for (auto& label : row)
        if (std::find(out.begin(), out.end(), label) == out.end()) out.push_back(label);
    return out;
  }

  // Row-major partition signature: cells mapped to the first-occurrence index
  // of their label. Two boxes group syllables identically iff these agree.
  std::array<int, 20> partition_signature() const {
    std::array<int, 20> sig{};
    std::vector<std::string> seen;
    size_t i = 0;
    for (auto& row : cells)
      for (auto& label : row) {
        auto it = std::find(seen.begin(), seen.end(), label);
        if (it == seen.end()) {
          seen.push_back(label);
          sig[i++] = static_cast<int>(seen.size()) - 1;
        } else {
          sig[i++] = static_cast<int>(it - seen.begin());
        }
      }
    return sig;
  }
};

inline const ToneBox& thai_tone_box() {
  static const ToneBox box = [] {
    ToneBox b;
    b.name = "thai5";
    b.tolerate_dead_marks = true;
    b.cells = {{
        {"Chattawa", "Ek", "Tho", "Ek", "Ek"},   // high
        {"Saman", "Ek", "Tho", "Ek", "Ek"},      // mid plain
        {"Saman", "Ek", "Tho", "Ek", "Ek"},      // mid glottal
        {"Saman", "Tho", "Tri", "Tho", "Tri"},   // low
    }};
    return b;
  }();
  return box;
}

inline const ToneBox& isan_tone_box() {
  static const ToneBox box = [] {
    ToneBox b;
    b.name = "isan6";
    b.cells = {{
        {"T1", "T4", "T5", "T5", "T1"},  // high
        {"T2", "T4", "T6", "T5", "T1"},  // mid plain
        {"T2", "T4", "T6", "T5", "T1"},  // mid glottal
        {"T3", "T4", "T6", "T6", "T4"},  // low
    }};
    return b;
  }();
  return box;
}

inline ToneBox load_tone_box(const TsvFile& tsv, const std::string& origin) {
  ToneBox box;
  box.name = "unnamed";
  for (const auto& d : tsv.directives) {
    auto parts = split(strip(d.substr(1)), ' ');
    if (!parts.empty() && parts[0] == "tonebox") {
      if (parts.size() > 1) box.name = parts[1];
      for (size_t i = 2; i < parts.size(); ++i)
        if (parts[i] == "tolerate-dead-marks") box.tolerate_dead_marks = true;
    }
  }
  std::array<std::array<bool, 5>, 4> seen{};
  for (const auto& row : tsv.rows) {
    if (row.fields.size() < 3)
      raise(errc::format_error, origin + ":" + std::to_string(row.line_no) +
                                    ": expected row<TAB>column<TAB>label");
    auto r = tone_row_from_string(row.fields[0]);
    auto c = tone_column_from_string(row.fields[1]);
    if (!r || !c)
      raise(errc::format_error, origin + ":" + std::to_string(row.line_no) +
                                    ": unknown cell id " + row.fields[0] + "/" + row.fields[1]);
    box.cell(*r, *c) = row.fields[2];
    if (row.fields.size() > 3 && !row.fields[3].empty())
      box.contours[row.fields[2]] = row.fields[3];
    seen[static_cast<size_t>(*r)][static_cast<size_t>(*c)] = true;
  }
  for (ToneRow r : k_all_rows)
    for (ToneColumn c : k_all_columns)
      if (!seen[static_cast<size_t>(r)][static_cast<size_t>(c)])
        raise(errc::incomplete_box, origin + ": missing cell " + std::string(to_string(r)) +
                                        "/" + to_string(c));
  return box;
}

inline ToneBox load_tone_box_file(const std::string& path) {
  return load_tone_box(read_tsv_file(path), path);
}

inline std::string serialize_tone_box(const ToneBox& box) {
  std::string out = "#tonebox " + box.name;
  if (box.tolerate_dead_marks) out += " tolerate-dead-marks";
  out += "\n";
  for (ToneRow r : k_all_rows)
    for (ToneColumn c : k_all_columns) {
      out += std::string(to_string(r)) + "\t" + to_string(c) + "\t" + box.cell(r, c);
      auto it = box.contours.find(box.cell(r, c));
      if (it != box.contours.end()) out += "\t" + it->second;
      out += "\n";
    }
  return out;
}

// ---------------------------------------------------------------------------
// Tone computation

inline ToneRow row_for_class(ConsonantClass c) {
  switch (c) {
    case ConsonantClass::High: return ToneRow::HighRow;
    case ConsonantClass::Mid: return ToneRow::MidPlainRow;
    case ConsonantClass::Low: return ToneRow::LowRow;
  }
  return ToneRow::MidPlainRow;
}

inline ToneCategory compute_tone(const ToneBox& box, ConsonantClass cls, ToneMark mark,
                                 SyllableKind kind) {
  ToneColumn col;
  if (kind != SyllableKind::Live) {
    if (mark != ToneMark::None && !box.tolerate_dead_marks)
      raise(errc::dead_with_mark, std::string("tone mark on a dead syllable (box ") +
                                      box.name + ")");
    col = kind == SyllableKind::DeadLong ? ToneColumn::DeadLong : ToneColumn::DeadShort;
  } else {
    switch (mark) {
      case ToneMark::None: col = ToneColumn::NoMark; break;
      case ToneMark::MaiEk: col = ToneColumn::MaiEk; break;
      case ToneMark::MaiTho: col = ToneColumn::MaiTho; break;
      default:
        raise(errc::mark_out_of_box,
              std::string(to_string(mark)) + " has no column in box " + box.name);
    }
  }
  const std::string& label = box.cell(row_for_class(cls), col);
  ToneCategory out{label, ""};
  auto it = box.contours.find(label);
  if (it != box.contours.end()) out.contour = it->second;
  return out;
}

// Central Thai five-tone category, extended with the standard readings of
// mai tri / mai chattawa on mid-class onsets.
inline ToneCategory compute_thai_tone(const OrthoSyllable& s) {
  ConsonantClass cls = effective_class(s);
  if (s.tone_mark == ToneMark::MaiTri || s.tone_mark == ToneMark::MaiChattawa) {
    if (cls != ConsonantClass::Mid)
      raise(errc::illegal_mark, std::string(to_string(s.tone_mark)) +
                                    " is reserved for mid-class onsets");
    return {s.tone_mark == ToneMark::MaiTri ? "Tri" : "Chattawa", ""};
  }
  return compute_tone(thai_tone_box(), cls, s.tone_mark, syllable_kind(s));
}

inline ToneCategory compute_isan_tone(const OrthoSyllable& s, const ToneBox& box = isan_tone_box()) {
  return compute_tone(box, effective_class(s), s.tone_mark, syllable_kind(s));
}

// ---------------------------------------------------------------------------
// Inverse tone box: enumerate spellings that realize a target tone

// Representative spellable letters per onset phoneme, one per class where the
// class exists for that sound. High-class spellings of the sonorants use the
// leading-ห device.
struct OnsetSpelling {
  char32_t letter;
  char32_t cluster;  // second written letter for /kʰw/-type onsets, or 0
  bool leading_ho;
  ConsonantClass cls;
};

inline const std::vector<std::pair<std::string, std::vector<OnsetSpelling>>>&
onset_spelling_table() {
  using CC = ConsonantClass;
  static const std::vector<std::pair<std::string, std::vector<OnsetSpelling>>> table = {
      {"p", {{U'ป', 0, false, CC::Mid}}},
      {"pʰ", {{U'ผ', 0, false, CC::High}, {U'พ', 0, false, CC::Low}}},
      {"b", {{U'บ', 0, false, CC::Mid}}},
      {"t", {{U'ต', 0, false, CC::Mid}}},
      {"tʰ", {{U'ถ', 0, false, CC::High}, {U'ท', 0, false, CC::Low}}},
      {"d", {{U'ด', 0, false, CC::Mid}}},
      {"tɕ", {{U'จ', 0, false, CC::Mid}}},
      {"tɕʰ", {{U'ฉ', 0, false, CC::High}, {U'ช', 0, false, CC::Low}}},
      {"k", {{U'ก', 0, false, CC::Mid}}},
      {"kʰ", {{U'ข', 0, false, CC::High}, {U'ค', 0, false, CC::Low}}},
      {"ʔ", {{U'อ', 0, false, CC::Mid}}},
      {"m", {{U'ม', 0, true, CC::High}, {U'ม', 0, false, CC::Low}}},
      {"n", {{U'น', 0, true, CC::High}, {U'น', 0, false, CC::Low}}},
      {"ɲ", {{U'ญ', 0, true, CC::High}, {U'ญ', 0, false, CC::Low}}},
      {"ŋ", {{U'ง', 0, true, CC::High}, {U'ง', 0, false, CC::Low}}},
      {"f", {{U'ฝ', 0, false, CC::High}, {U'ฟ', 0, false, CC::Low}}},
      {"s", {{U'ส', 0, false, CC::High}, {U'ซ', 0, false, CC::Low}}},
      {"h", {{U'ห', 0, false, CC::High}, {U'ฮ', 0, false, CC::Low}}},
      {"l", {{U'ล', 0, true, CC::High}, {U'ล', 0, false, CC::Low}}},
      {"w", {{U'ว', 0, true, CC::High}, {U'ว', 0, false, CC::Low}}},
      {"j", {{U'ย', 0, true, CC::High}, {U'ย', 0, false, CC::Low}}},
      {"kʰw", {{U'ข', U'ว', false, CC::High}, {U'ค', U'ว', false, CC::Low}}},
  };
  return table;
}

inline const std::vector<OnsetSpelling>* find_onset_spellings(std::string_view phoneme) {
  for (const auto& [ph, opts] : onset_spelling_table())
    if (ph == phoneme) return &opts;
  return nullptr;
}

struct Rime {
  VowelPattern pattern;
  char32_t coda_letter = 0;

  SyllableKind kind() const {
    OrthoSyllable probe;
    probe.onset_letter = U'ก';
    probe.vowel_pattern = pattern;
    probe.vowel_length = vowel_pattern_info(pattern).length;
    probe.coda_letter = coda_letter;
    return syllable_kind(probe);
  }
};

// All (letter, mark) spellings whose tone under `box` equals `target`.
// Candidates run high class before low, unmarked before marked; dead rimes
// admit no mark at all.
inline std::vector<OrthoSyllable> candidate_spellings(std::string_view onset_phoneme,
                                                      const Rime& rime,
                                                      const ToneCategory& target,
                                                      const ToneBox& box = isan_tone_box()) {
  const auto* options = find_onset_spellings(onset_phoneme);
  if (!options)
    raise(errc::unknown_onset, "no letters for onset phoneme " + std::string(onset_phoneme));

  SyllableKind kind = rime.kind();
  std::vector<ToneMark> marks;
  if (kind == SyllableKind::Live)
    marks = {ToneMark::None, ToneMark::MaiEk, ToneMark::MaiTho};
  else
    marks = {ToneMark::None};

  std::vector<OrthoSyllable> out;
  for (const auto& opt : *options) {
    for (ToneMark mark : marks) {
      if (compute_tone(box, opt.cls, mark, kind).label != target.label) continue;
      OrthoSyllable s;
      s.onset_letter = opt.letter;
      s.cluster_letter = opt.cluster;
      s.leading_ho = opt.leading_ho;
      s.vowel_pattern = rime.pattern;
      s.vowel_length = vowel_pattern_info(rime.pattern).length;
      s.coda_letter = rime.coda_letter;
      s.tone_mark = mark;
      try {
        render_syllable(s);  // emit only spellable combinations
      } catch (const error&) {
        continue;
      }
      out.push_back(s);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dialect classification

enum class DialectClass { SixTone, NotSixTone };

inline const char* to_string(DialectClass d) {
  return d == DialectClass::SixTone ? "SixTone" : "NotSixTone";
}

// Cells of an elicited Gedney box, all 20 required. Labels are opaque.
using GedneyCells = std::map<std::pair<ToneRow, ToneColumn>, std::string>;

inline DialectClass classify_dialect(const GedneyCells& elicited,
                                     const ToneBox& reference = isan_tone_box()) {
  ToneBox probe;
  probe.name = "elicited";
  for (ToneRow r : k_all_rows)
    for (ToneColumn c : k_all_columns) {
      auto it = elicited.find({r, c});
      if (it == elicited.end() || it->second.empty())
        raise(errc::incomplete_box, std::string("missing elicited cell ") + to_string(r) + "/" +
                                        to_string(c));
      probe.cell(r, c) = it->second;
    }
  return probe.partition_signature() == reference.partition_signature()
             ? DialectClass::SixTone
             : DialectClass::NotSixTone;
}

inline GedneyCells gedney_cells_of(const ToneBox& box) {
  GedneyCells out;
  for (ToneRow r : k_all_rows)
    for (ToneColumn c : k_all_columns) out[{r, c}] = box.cell(r, c);
  return out;
}

}  // namespace isan
