#include "isan/g2p.hpp"

#include <random>
#include <sstream>

#include "doctest.h"
#include "isan/toolkit.hpp"
#include "test_util.hpp"

using namespace isan;

namespace {
const Toolkit& kit() {
  static const Toolkit t = Toolkit::load_dir(ISAN_DATA_DIR);
  return t;
}
std::string phon(const char* word) {
  return to_string(kit().g2p().phonemize_word(word, kit().lexicon()));
}
}  // namespace

TEST_CASE("phoneme inventory invariants") {
  const auto& inv = phoneme_inventory();
  CHECK(inv.native_onsets.size() == 20);
  CHECK_FALSE(inv.is_onset("r"));
  CHECK(inv.is_onset("ɲ"));
  CHECK(inv.is_onset("tɕʰ"));  // contact phoneme, loans and proper names only
  CHECK(inv.vowels.size() == 21);  // 9 qualities x 2 lengths + 3 diphthongs
  CHECK(inv.codas.size() == 9);
  CHECK(inv.tones.size() == 7);  // T1..T6 + TRI
}

TEST_CASE("citation-form goldens") {
  CHECK(phon("กา") == "k aː T2");
  CHECK(phon("บอล") == "b ɔː n T2");
  CHECK(phon("ซอส") == "s ɔː t̚ T4");   // lexical tone override
  CHECK(phon("เกาะ") == "k ɔ ʔ T1");
  CHECK(phon("พุ") == "pʰ u ʔ T4");
  CHECK(phon("ปราบ") == "p aː p̚ T5");   // liquid cluster reduced
  CHECK(phon("ขวิด") == "kʰ w i t̚ T1");  // whitelisted ว cluster kept
  CHECK(phon("ความ") == "kʰ ua m T3");   // glide absorbed into the nucleus
  CHECK(phon("เกวียน") == "k ia n T2");  // glide dropped before a diphthong
  CHECK(phon("ศาสนา") == "s aː t̚ T5 . s a ʔ T1 . n aː T3");
  CHECK(phon("ตำบักหุ่ง") == "t a m T2 . b a k̚ T1 . h u ŋ T4");
}

TEST_CASE("onset resolution follows lexical hints") {
  const G2p& g = kit().g2p();
  const Lexicon& lex = kit().lexicon();
  CHECK(to_string(g.phonemize_word("รัก", lex, 0)) == "h a k̚ T4");
  CHECK(to_string(g.phonemize_word("รัก", lex, 1)) == "l a k̚ T4");
  CHECK(to_string(g.phonemize_word("เสือ", lex, 0)) == "s ɯa T1");
  CHECK(to_string(g.phonemize_word("เสือ", lex, 1)) == "s ia T1");

  const LexiconEntry* grill = lex.lookup("ย่าง", "grill");
  const LexiconEntry* walk = lex.lookup("ย่าง", "walk");
  REQUIRE(grill != nullptr);
  REQUIRE(walk != nullptr);
  CHECK(to_string(g.phonemize_entry(*grill)) == "j aː ŋ T6");
  CHECK(to_string(g.phonemize_entry(*walk)) == "ɲ aː ŋ T4");
}

TEST_CASE("foreign finals adapt to the coda inventory") {
  const G2p& g = kit().g2p();
  CHECK(g.adapt_foreign_coda("l") == "n");
  CHECK(g.adapt_foreign_coda("s") == "t̚");
  CHECK(g.adapt_foreign_coda("m") == "m");
  CHECK_THROWS_AS(g.adapt_foreign_coda("x"), error);

  LexiconEntry e;
  e.headword = "แคช";
  e.hints["final"] = {"tɕʰ"};
  CHECK(to_string(g.phonemize_entry(e)) == "kʰ ɛː t̚ T6");
}

TEST_CASE("TRI is assigned only through lexicon annotation") {
  for (const auto& row : isan_tone_box().cells)
    for (const auto& label : row) CHECK(label != "TRI");
  LexiconEntry e;
  e.headword = "โน้ต";
  e.hints["tone"] = {"TRI"};
  Pronunciation p = kit().g2p().phonemize_entry(e);
  REQUIRE(p.size() == 1);
  CHECK(p[0].tone == "TRI");
  CHECK(validate_phonotactics(p[0]).empty());
}

TEST_CASE("toolkit refuses a missing data directory") {
  CHECK_THROWS_AS(Toolkit::load_dir("/nonexistent/isan-data"), error);
}

TEST_CASE("explicit pronunciations override phonemization") {
  LexiconEntry e;
  e.headword = "เว้า";
  e.hints["pron"] = {"w a w T6", "w a w T5"};
  const G2p& g = kit().g2p();
  CHECK(to_string(g.phonemize_entry(e, 0)) == "w a w T6");
  CHECK(to_string(g.phonemize_entry(e, 1)) == "w a w T5");
}

TEST_CASE("lexicon TSV requires the version header") {
  CHECK_THROWS_AS(load_lexicon(read_tsv_string("เว้า\tIsanNative\n"), "<mem>"), error);
  Lexicon lex = load_lexicon(
      read_tsv_string("#isan-dict v1\nเว้า\tIsanNative\t-\t-\t-\t0\tพูด\tเว้า\n"), "<mem>");
  CHECK(lex.entries().front().etymon == "เว้า");
}

TEST_CASE("phonemize errors") {
  const G2p& g = kit().g2p();
  CHECK_THROWS_AS(g.phonemize_word("ตลาด", kit().lexicon()), error);
  try {
    g.phonemize_word("ตลาด", kit().lexicon());
  } catch (const error& e) {
    CHECK(e.code() == errc::segmentation_required);
  }
  CHECK(to_string(g.phonemize_word("ตะ-หลาด", kit().lexicon())) == "t a ʔ T1 . l aː t̚ T5");
  CHECK_THROWS_AS(g.phonemize_syllable(parse_syllable("ฤก")), error);
}

TEST_CASE("phonotactic validator") {
  CHECK(validate_phonotactics(parse_phonetic_syllable("k aː T2")).empty());
  auto has = [](const PhoneticSyllable& s, const char* code) {
    for (const auto& v : validate_phonotactics(s))
      if (v.code == code) return true;
    return false;
  };
  CHECK(has({{"r"}, "a", "k̚", "T4"}, "r-phoneme"));
  CHECK(has({{"k"}, "ɔː", "ʔ", "T1"}, "glottal-long"));
  CHECK(has({{"k"}, "ɔ", "", "T1"}, "short-open"));
  CHECK(has({{"t", "w"}, "aː", "", "T2"}, "bad-cluster"));
  CHECK(has({{"k"}, "aː", "l", "T2"}, "bad-coda"));
  CHECK(has({{"k"}, "aː", "", ""}, "no-tone"));
}

TEST_CASE("property: phonemized output is always phonotactically valid") {
  std::mt19937 rng(99);
  const G2p& g = kit().g2p();
  for (int i = 0; i < 3000; ++i) {
    OrthoSyllable s = testutil::random_syllable(rng);
    PhoneticSyllable p = g.phonemize_syllable(s);
    CAPTURE(render_syllable(s));
    CHECK(validate_phonotactics(p).empty());
  }
}

TEST_CASE("tone coherence for plain lexicon entries") {
  // Entries with a lexical tone (loans, attested irregular spellings like
  // แซ่บ) are exempt; everything else must agree with the tone box.
  for (const auto& e : kit().lexicon().entries()) {
    if (e.hints.count("tone") || e.origin == WordOrigin::Loanword ||
        e.origin == WordOrigin::ProperName || !e.syllables.empty() || !e.context.empty())
      continue;
    OrthoSyllable s;
    try {
      s = parse_syllable(e.headword);
    } catch (const error&) {
      continue;
    }
    Pronunciation p = kit().g2p().phonemize_entry(e);
    REQUIRE(p.size() == 1);
    CHECK(p[0].tone == compute_isan_tone(s).label);
  }
}

TEST_CASE("pronunciation string round-trip") {
  for (const char* text : {"k aː T2", "kʰ w i t̚ T1", "s aː t̚ T5 . s a ʔ T1 . n aː T3"}) {
    CHECK(to_string(parse_pronunciation(text)) == text);
  }
  CHECK_THROWS_AS(parse_phonetic_syllable("k aː"), error);
  CHECK_THROWS_AS(parse_phonetic_syllable("k aː X9"), error);
}

TEST_CASE("dictionary build: variants and homographs") {
  DictStore d = build_dictionary({"รัก", "เสือ", "ย่าง", "พ่อ", "กา"}, kit().lexicon(),
                                 kit().g2p());
  const DictEntry* rak = d.find("รัก", "");
  REQUIRE(rak != nullptr);
  REQUIRE(rak->prons.size() == 2);
  CHECK(rak->prons[0].rank == PronRank::Primary);
  CHECK(to_string(rak->prons[0].phones) == "h a k̚ T4");
  CHECK(rak->prons[1].rank == PronRank::Variant);
  CHECK(to_string(rak->prons[1].phones) == "l a k̚ T4");

  CHECK(d.find("ย่าง").size() == 2);
  const DictEntry* suea = d.find("เสือ", "");
  REQUIRE(suea != nullptr);
  CHECK(to_string(suea->prons[0].phones) == "s ɯa T1");
  CHECK(to_string(suea->prons[1].phones) == "s ia T1");
  const DictEntry* pho = d.find("พ่อ", "");
  REQUIRE(pho != nullptr);
  CHECK(to_string(pho->prons[0].phones) == "pʰ ɔː T4");
  CHECK(to_string(pho->prons[1].phones) == "pʰ ɔː T6");
}

TEST_CASE("dictionary lookup") {
  DictStore d = build_dictionary({"รัก", "ย่าง"}, kit().lexicon(), kit().g2p());
  DictLookup ranked = lookup(d, "รัก");
  REQUIRE(ranked.entries.size() == 1);
  CHECK_FALSE(ranked.ambiguous);
  DictLookup homograph = lookup(d, "ย่าง");
  CHECK(homograph.entries.size() == 2);
  CHECK(homograph.ambiguous);
  DictLookup grill = lookup(d, "ย่าง", std::string("grill"));
  REQUIRE(grill.entries.size() == 1);
  CHECK(to_string(grill.entries[0]->prons[0].phones) == "j aː ŋ T6");
  CHECK_THROWS_AS(lookup(d, "ไม่มี"), error);
  CHECK_THROWS_AS(lookup(d, "รัก", std::string("nonexistent")), error);
}

TEST_CASE("dictionary serialization round-trips") {
  DictStore d = build_dictionary({"รัก", "เสือ", "ย่าง", "กา", "ขวิด"}, kit().lexicon(),
                                 kit().g2p());
  std::string text = serialize_dictionary(d);
  DictStore back = parse_dictionary(read_tsv_string(text), "<mem>");
  CHECK(back == d);
  CHECK(serialize_dictionary(back) == text);

  DictStore empty;
  CHECK(parse_dictionary(read_tsv_string(serialize_dictionary(empty)), "<mem>") == empty);
}

TEST_CASE("dictionary format errors carry line numbers") {
  auto fails_with = [](const std::string& text, errc code) {
    try {
      parse_dictionary(read_tsv_string(text), "<mem>");
    } catch (const error& e) {
      return e.code() == code;
    }
    return false;
  };
  CHECK(fails_with("รัก\t-\tP\th a k̚ T4\tThaiCognate\n", errc::format_error));  // no header
  CHECK(fails_with("#isan-dict v1\nรัก\t-\tQ\th a k̚ T4\tThaiCognate\n", errc::format_error));
  CHECK(fails_with("#isan-dict v1\nรัก\t-\tP\th a k̚\tThaiCognate\n", errc::format_error));
  CHECK(fails_with("#isan-dict v1\nรัก\t-\tP\th a k̚ T4\n", errc::format_error));
  // Two primaries for one (headword, context).
  CHECK(fails_with(
      "#isan-dict v1\nรัก\t-\tP\th a k̚ T4\tThaiCognate\nรัก\t-\tP\tl a k̚ T4\tThaiCognate\n",
      errc::duplicate_primary));
}

TEST_CASE("property: random stores round-trip through the file format") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    DictStore store;
    int entries = 1 + rng() % 8;
    for (int i = 0; i < entries; ++i) {
      DictEntry e;
      e.headword = render_syllable(testutil::random_syllable(rng));
      e.context = (rng() % 3 == 0) ? "ctx" + std::to_string(rng() % 10) : "";
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
    CHECK(back == store);
    CHECK(serialize_dictionary(back) == text);
  }
}
