// Acceptance suite: one line per criterion, exact tolerances, wall-clock
// budgets enforced. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "isan/isan.hpp"
#include "test_util.hpp"

using namespace isan;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_ms;
  std::function<void(std::vector<std::string>&)> run;  // appends failure notes
};

const Toolkit& kit() {
  static const Toolkit t = Toolkit::load_dir(ISAN_DATA_DIR);
  return t;
}

#define EXPECT(cond, note)                            \
  do {                                                \
    if (!(cond)) fails.push_back(note);               \
  } while (0)

std::string isan_tone(const char* word) {
  return compute_isan_tone(parse_syllable(word), kit().isan_box()).label;
}

void criterion_tonebox(std::vector<std::string>& fails) {
  struct Cell { ConsonantClass cls; ToneMark mark; SyllableKind kind; const char* label; };
  const Cell cells[] = {
      {ConsonantClass::High, ToneMark::None, SyllableKind::Live, "T1"},
      {ConsonantClass::High, ToneMark::MaiEk, SyllableKind::Live, "T4"},
      {ConsonantClass::High, ToneMark::MaiTho, SyllableKind::Live, "T5"},
      {ConsonantClass::High, ToneMark::None, SyllableKind::DeadLong, "T5"},
      {ConsonantClass::High, ToneMark::None, SyllableKind::DeadShort, "T1"},
      {ConsonantClass::Mid, ToneMark::None, SyllableKind::Live, "T2"},
      {ConsonantClass::Mid, ToneMark::MaiEk, SyllableKind::Live, "T4"},
      {ConsonantClass::Mid, ToneMark::MaiTho, SyllableKind::Live, "T6"},
      {ConsonantClass::Mid, ToneMark::None, SyllableKind::DeadLong, "T5"},
      {ConsonantClass::Mid, ToneMark::None, SyllableKind::DeadShort, "T1"},
      {ConsonantClass::Low, ToneMark::None, SyllableKind::Live, "T3"},
      {ConsonantClass::Low, ToneMark::MaiEk, SyllableKind::Live, "T4"},
      {ConsonantClass::Low, ToneMark::MaiTho, SyllableKind::Live, "T6"},
      {ConsonantClass::Low, ToneMark::None, SyllableKind::DeadLong, "T6"},
      {ConsonantClass::Low, ToneMark::None, SyllableKind::DeadShort, "T4"},
  };
  for (const auto& c : cells) {
    std::string got = compute_tone(kit().isan_box(), c.cls, c.mark, c.kind).label;
    EXPECT(got == c.label, std::string("cell(") + to_string(c.cls) + "," + to_string(c.mark) +
                               "," + to_string(c.kind) + ")=" + got + " want " + c.label);
  }
  const std::pair<const char*, const char*> words[] = {
      {"ขา", "T1"}, {"ปลา", "T2"}, {"งู", "T3"}, {"ค่า", "T4"}, {"หมาก", "T5"},
      {"ม้า", "T6"}, {"มด", "T4"}, {"ผัก", "T1"}, {"บีบ", "T5"}, {"เชือก", "T6"}};
  for (const auto& [w, t] : words) {
    std::string got = isan_tone(w);
    EXPECT(got == t, std::string(w) + "->" + got + " want " + t);
  }
}

void criterion_thaibox(std::vector<std::string>& fails) {
  EXPECT(kit().thai_box().distinct_labels().size() == 5, "Thai box must induce 5 categories");
  const std::pair<const char*, const char*> words[] = {
      {"ตา", "Saman"}, {"ค่า", "Tho"}, {"ขา", "Chattawa"}};
  for (const auto& [w, t] : words) {
    std::string got = compute_thai_tone(parse_syllable(w)).label;
    EXPECT(got == t, std::string(w) + "->" + got + " want " + t);
  }
}

void criterion_inverse_box(std::vector<std::string>& fails) {
  const Rime rimes[] = {
      {VowelPattern::AA, 0},     {VowelPattern::AA, U'น'}, {VowelPattern::AA, U'ก'},
      {VowelPattern::AA, U'ม'},  {VowelPattern::AA, U'ย'}, {VowelPattern::AA, U'ว'},
      {VowelPattern::AAW, 0},    {VowelPattern::AAW, U'ย'}, {VowelPattern::AAW, U'ง'},
      {VowelPattern::I, U'ด'},   {VowelPattern::I, U'น'},  {VowelPattern::II, 0},
      {VowelPattern::II, U'บ'},  {VowelPattern::U, U'ด'},  {VowelPattern::UU, 0},
      {VowelPattern::UU, U'ม'},  {VowelPattern::UE, U'ก'}, {VowelPattern::UEE, 0},
      {VowelPattern::E, U'ง'},   {VowelPattern::E, U'ด'},  {VowelPattern::AAE, 0},
      {VowelPattern::AAE, U'ว'}, {VowelPattern::O, U'ด'},  {VowelPattern::OO, 0},
      {VowelPattern::AW, 0},     {VowelPattern::IA, 0},    {VowelPattern::IA, U'น'},
      {VowelPattern::UEA, U'ก'}, {VowelPattern::UA, U'น'}, {VowelPattern::AM, 0},
  };
  const char* tones[] = {"T1", "T2", "T3", "T4", "T5", "T6"};
  long checked = 0;
  for (const auto& [phoneme, options] : onset_spelling_table()) {
    for (const auto& rime : rimes) {
      for (const char* tone : tones) {
        for (const auto& c :
             candidate_spellings(phoneme, rime, ToneCategory{tone, ""}, kit().isan_box())) {
          std::string text = render_syllable(c);
          std::string got = isan_tone(text.c_str());
          ++checked;
          if (got != tone) {
            EXPECT(false, text + " recomputes to " + got + " want " + tone);
            return;
          }
        }
      }
    }
  }
  EXPECT(checked > 1000, "cross-product produced too few candidates");

  Rime khoj{VowelPattern::AAW, U'ย'};
  const std::map<std::string, size_t> expected = {{"T1", 1}, {"T2", 0}, {"T3", 1},
                                                  {"T4", 2}, {"T5", 1}, {"T6", 1}};
  for (const auto& [tone, want] : expected) {
    size_t got =
        candidate_spellings("kʰ", khoj, ToneCategory{tone, ""}, kit().isan_box()).size();
    EXPECT(got == want, "kʰ/-ɔːj " + tone + " count " + std::to_string(got) + " want " +
                            std::to_string(want));
  }
}

void criterion_dialect(std::vector<std::string>& fails) {
  EXPECT(classify_dialect(gedney_cells_of(kit().isan_box()), kit().isan_box()) ==
             DialectClass::SixTone,
         "Isan partition must classify SixTone");
  EXPECT(classify_dialect(gedney_cells_of(kit().thai_box()), kit().isan_box()) ==
             DialectClass::NotSixTone,
         "Thai partition must classify NotSixTone");
  std::mt19937 rng(20250810);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::string> labels = {"a", "b", "c", "d", "e", "f"};
    std::shuffle(labels.begin(), labels.end(), rng);
    std::map<std::string, std::string> renaming;
    int next = 0;
    GedneyCells cells;
    for (ToneRow r : k_all_rows)
      for (ToneColumn c : k_all_columns) {
        const std::string& orig = kit().isan_box().cell(r, c);
        if (!renaming.count(orig)) renaming[orig] = labels[next++];
        cells[{r, c}] = renaming[orig];
      }
    if (classify_dialect(cells, kit().isan_box()) != DialectClass::SixTone) {
      EXPECT(false, "relabeling trial " + std::to_string(trial) + " not SixTone");
      return;
    }
  }
}

void criterion_correspondence(std::vector<std::string>& fails) {
  Orthography ortho = kit().orthography();
  // Every shipped rule row reproduces on its own examples.
  for (const auto& rule : ortho.rules().rules()) {
    for (const auto& word : rule.examples) {
      OrthoSyllable s = parse_syllable(word);
      auto rewritten = rewrite_with_rule(rule, s);
      if (!rewritten) {
        EXPECT(false, rule.id + ": example " + word + " does not match its own rule");
        continue;
      }
      std::string expected =
          rule.policy == RulePolicy::SpellBySound ? render_syllable(*rewritten) : word;
      // Words listed under several rules follow the first listing.
      std::string got = ortho.apply_correspondence(word);
      bool first_listing = true;
      for (const auto& other : ortho.rules().rules()) {
        if (&other == &rule) break;
        if (std::find(other.examples.begin(), other.examples.end(), word) !=
            other.examples.end())
          first_listing = false;
      }
      if (first_listing)
        EXPECT(got == expected, rule.id + ": " + word + "->" + got + " want " + expected);
    }
  }
  const std::pair<const char*, const char*> named[] = {
      {"รัก", "ฮัก"}, {"โรง", "โฮง"}, {"ฉีก", "ฉีก"}, {"รวย", "รวย"}};
  for (const auto& [w, want] : named) {
    std::string got = kit().orthography().apply_correspondence(w);
    EXPECT(got == want, std::string(w) + "->" + got + " want " + want);
  }
}

void criterion_g2p(std::vector<std::string>& fails) {
  const std::pair<const char*, const char*> goldens[] = {
      {"กา", "k aː T2"},
      {"บอล", "b ɔː n T2"},
      {"เกาะ", "k ɔ ʔ T1"},
      {"ปราบ", "p aː p̚ T5"},
      {"ขวิด", "kʰ w i t̚ T1"},
      {"ศาสนา", "s aː t̚ T5 . s a ʔ T1 . n aː T3"},
  };
  for (const auto& [w, want] : goldens) {
    std::string got = to_string(kit().g2p().phonemize_word(w, kit().lexicon()));
    EXPECT(got == want, std::string(w) + " -> " + got + " want " + want);
  }
}

void criterion_phonotactics(std::vector<std::string>& fails) {
  std::mt19937 rng(777);
  const G2p& g = kit().g2p();
  for (int i = 0; i < 10000; ++i) {
    OrthoSyllable s = testutil::random_syllable(rng);
    PhoneticSyllable p;
    try {
      p = g.phonemize_syllable(s);
    } catch (const error& e) {
      EXPECT(false, "phonemize failed on " + render_syllable(s) + ": " + e.what());
      return;
    }
    if (!validate_phonotactics(p).empty()) {
      EXPECT(false, "violations for " + render_syllable(s) + " -> " + to_string(p));
      return;
    }
  }
  for (int i = 0; i < 500; ++i) {
    PhoneticSyllable p = testutil::random_phonetic_syllable(rng);
    PhoneticSyllable with_r = p;
    with_r.onset = {"r"};
    if (validate_phonotactics(with_r).empty()) {
      EXPECT(false, "injected /r/ not caught in " + to_string(with_r));
      return;
    }
    PhoneticSyllable glottal = p;
    glottal.nucleus = "aː";
    glottal.coda = "ʔ";
    if (validate_phonotactics(glottal).empty()) {
      EXPECT(false, "injected long-vowel glottal not caught in " + to_string(glottal));
      return;
    }
  }
}

void criterion_dictionary(std::vector<std::string>& fails) {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 1000; ++trial) {
    DictStore store;
    int entries = 1 + rng() % 6;
    for (int i = 0; i < entries; ++i) {
      DictEntry e;
      e.headword = render_syllable(testutil::random_syllable(rng));
      e.context = (rng() % 4 == 0) ? "ctx" + std::to_string(rng() % 5) : "";
      e.origin = static_cast<WordOrigin>(rng() % 4);
      int prons = 1 + rng() % 3;
      for (int k = 0; k < prons; ++k)
        e.prons.push_back({{testutil::random_phonetic_syllable(rng)},
                           k == 0 ? PronRank::Primary : PronRank::Variant});
      if (store.find(e.headword, e.context)) continue;
      store.add(std::move(e));
    }
    std::string text = serialize_dictionary(store);
    DictStore back = parse_dictionary(read_tsv_string(text), "<mem>");
    if (!(back == store)) {
      EXPECT(false, "round-trip mismatch at trial " + std::to_string(trial));
      return;
    }
  }

  DictStore d = build_dictionary({"รัก", "ย่าง"}, kit().lexicon(), kit().g2p());
  const DictEntry* rak = d.find("รัก", "");
  EXPECT(rak != nullptr, "missing entry for รัก");
  if (rak) {
    EXPECT(rak->prons.size() == 2 && rak->prons[0].rank == PronRank::Primary &&
               to_string(rak->prons[0].phones) == "h a k̚ T4" &&
               to_string(rak->prons[1].phones) == "l a k̚ T4",
           "รัก must rank /h/ primary and /l/ variant");
  }
  EXPECT(d.find("ย่าง").size() == 2, "ย่าง must have two context entries");
  DictStore rebuilt = parse_dictionary(read_tsv_string(serialize_dictionary(d)), "<mem>");
  EXPECT(rebuilt == d, "fixture dictionary round-trip");
}

void criterion_transcript(std::vector<std::string>& fails) {
  TranscriptConfig config = kit().transcript_config();
  config.protected_spans.push_back("7-Eleven");
  auto diags = [&](const std::string& text) {
    return validate_line({text, 1, ""}, config);
  };
  const char* positives[] = {
      "สนใจติดต่อ ศูนย์แปดสี่ สามหกสอง สามหกสองสี่",
      "โทรด่วนก่อนหมดเขต ศูนย์สองแปดสามหกเจ็ดเจ็ดเจ็ดเจ็ดเจ็ด",
      "ตอนเดือน ม.ค. คนที่เข้ามาร่วมมาจาก มช. บ้าง มศว บ้าง ป.ป.ช. บ้าง",
      "สส จำนวนสองร้อยคนเดินเข้าเข้าออกออกร้าน 7-Eleven",
  };
  for (const char* line : positives) {
    auto ds = diags(line);
    EXPECT(ds.empty(), std::string("expected clean line, got ") +
                           (ds.empty() ? "" : ds[0].rule) + " on: " + line);
  }
  const std::pair<std::string, const char*> mutations[] = {
      {"สนใจติดต่อ ศูนย์แปดสี่ๆ สามหกสอง สามหกสองสี่", "no-maiyamok"},
      {"สนใจติดต่อ 7 ศูนย์แปดสี่ สามหกสอง สามหกสองสี่", "no-digit"},
      {"สนใจติดต่อ ศูนย์แปดสี่  สามหกสอง สามหกสองสี่", "spacing-double"},
  };
  for (const auto& [line, rule] : mutations) {
    auto ds = diags(line);
    EXPECT(ds.size() == 1 && ds[0].rule == rule,
           std::string("mutation for ") + rule + " produced " + std::to_string(ds.size()) +
               " finding(s)" + (ds.empty() ? "" : " first=" + ds[0].rule));
  }

  std::vector<std::string> variants;
  for (const auto& e : kit().markers().entries())
    for (const auto& v : e.variants) variants.push_back(v);
  auto once = canonicalize_markers(variants, kit().markers());
  auto twice = canonicalize_markers(once.tokens, kit().markers());
  EXPECT(once.tokens == twice.tokens && twice.diagnostics.empty(),
         "canonicalize_markers must be idempotent");
}

void criterion_spelling(std::vector<std::string>& fails) {
  Orthography ortho = kit().orthography();
  auto tsv = read_tsv_file(std::string(ISAN_DATA_DIR) + "/spelling_fixture.tsv");
  EXPECT(tsv.rows.size() >= 50, "fixture must carry at least 50 words");
  for (const auto& row : tsv.rows) {
    const std::string& word = row.fields[0];
    auto origin = word_origin_from_string(row.fields[1]);
    if (!origin) {
      EXPECT(false, word + ": bad origin column");
      continue;
    }
    std::optional<Pronunciation> pron;
    if (row.fields[2] != "-") pron = parse_pronunciation(row.fields[2]);
    std::optional<std::string> etymon;
    if (row.fields[3] != "-") etymon = row.fields[3];
    SpellingDecision d;
    try {
      d = ortho.spell(word, *origin, pron, etymon);
    } catch (const error& e) {
      EXPECT(false, word + ": " + e.what());
      continue;
    }
    EXPECT(d.spelling == row.fields[4], word + " -> " + d.spelling + " want " + row.fields[4]);
    if (*origin == WordOrigin::IsanNative && pron) {
      auto violations = ortho.check_orthographic_constraints(d.spelling);
      EXPECT(violations.empty(), d.spelling + " violates " +
                                     (violations.empty() ? "" : violations[0].rule));
    }
  }
  std::string suan =
      ortho.derive_spelling(parse_phonetic_syllable("s ua n T6")).spelling;
  EXPECT(suan == "ซ้วน", "derived " + suan + " want ซ้วน");
  EXPECT(!ortho.check_orthographic_constraints("ซั้วน").empty(),
         "ซั้วน must be flagged unreduced");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "Isan tone-box golden suite", 1000, criterion_tonebox},
      {2, "Thai tone-box suite", 1000, criterion_thaibox},
      {3, "inverse-box spelling property", 5000, criterion_inverse_box},
      {4, "dialect classifier", 5000, criterion_dialect},
      {5, "correspondence suite", 1000, criterion_correspondence},
      {6, "grapheme-to-phoneme goldens", 1000, criterion_g2p},
      {7, "phonotactics property", 10000, criterion_phonotactics},
      {8, "dictionary round-trip", 5000, criterion_dictionary},
      {9, "transcript validator", 1000, criterion_transcript},
      {10, "spelling-standard integration", 1000, criterion_spelling},
  };

  int failed = 0;
  for (auto& c : criteria) {
    std::vector<std::string> fails;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(fails);
    } catch (const std::exception& e) {
      fails.push_back(std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
    if (ms > c.budget_ms)
      fails.push_back("runtime " + std::to_string(ms) + "ms exceeds budget " +
                      std::to_string(c.budget_ms) + "ms");
    if (fails.empty()) {
      std::printf("PASS criterion %2d: %s (%.0f ms)\n", c.number, c.title.c_str(), ms);
    } else {
      ++failed;
      std::printf("FAIL criterion %2d: %s (%.0f ms)\n", c.number, c.title.c_str(), ms);
      for (const auto& f : fails) std::printf("       - %s\n", f.c_str());
    }
  }
  if (failed) std::printf("%d criterion(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
