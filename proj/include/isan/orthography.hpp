#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "isan/error.hpp"
#include "isan/g2p.hpp"
#include "isan/lexicon.hpp"
#include "isan/script.hpp"
#include "isan/tonebox.hpp"
#include "isan/tsv.hpp"

// The spelling standard: route each simple word by origin, rewrite Thai
// cognates through the correspondence tables, derive Isan-native spellings
// through the inverse tone box, and enforce the orthographic constraints.

namespace isan {

// ---------------------------------------------------------------------------
// Correspondence rules

enum class RulePolicy { SpellBySound, SpellCentral };
enum class RuleKind { Onset, Vowel, ClusterW };

inline const char* to_string(RulePolicy p) {
  return p == RulePolicy::SpellBySound ? "by_sound" : "central";
}

struct CorrespondenceRule {
  std::string id;
  RuleKind kind;
  std::string source;  // onset: a letter; vowel: a pattern id; cluster_w: unused
  std::string target;  // onset: a letter; vowel/cluster_w: a pattern id
  RulePolicy policy;
  std::vector<std::string> examples;
};

class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(std::vector<CorrespondenceRule> rules) : rules_(std::move(rules)) {}

  const std::vector<CorrespondenceRule>& rules() const { return rules_; }
  void add(CorrespondenceRule r) { rules_.push_back(std::move(r)); }

 private:
  std::vector<CorrespondenceRule> rules_;
};

// Seeded from the published correspondence tables; field linguists extend
// these through the TSV file, not code.
inline const RuleSet& builtin_rules() {
  static const RuleSet rules{{
      {"ch-s", RuleKind::Onset, "ช", "ซ", RulePolicy::SpellBySound, {"ช่าง", "ชุด"}},
      {"r-h", RuleKind::Onset, "ร", "ฮ", RulePolicy::SpellBySound, {"รัก", "โรง", "รู้", "เรา"}},
      {"ue-oee", RuleKind::Vowel, "ue", "oee", RulePolicy::SpellBySound, {"ลึก", "ดึก"}},
      {"aa-ua", RuleKind::Vowel, "aa", "ua", RulePolicy::SpellBySound, {"ขาม", "สาย"}},
      {"ch-s-central", RuleKind::Onset, "ฉ", "ส", RulePolicy::SpellCentral, {"ฉีก", "เฉย"}},
      {"r-l-central", RuleKind::Onset, "ร", "ล", RulePolicy::SpellCentral, {"รัก", "รวย"}},
      {"uea-ia-central", RuleKind::Vowel, "uea", "ia", RulePolicy::SpellCentral,
       {"เสื่อ", "เดือด"}},
      {"w-ua-central", RuleKind::ClusterW, "", "ua", RulePolicy::SpellCentral,
       {"กวาด", "ความ"}},
  }};
  return rules;
}

// Columns: id, kind (onset|vowel|cluster_w), source, target, policy
// (by_sound|central), examples (comma separated).
inline RuleSet load_rules(const TsvFile& tsv, const std::string& origin) {
  RuleSet out;
  for (const auto& row : tsv.rows) {
    const std::string where = origin + ":" + std::to_string(row.line_no);
    if (row.fields.size() < 5) raise(errc::format_error, where + ": too few columns");
    CorrespondenceRule r;
    r.id = row.fields[0];
    if (row.fields[1] == "onset")
      r.kind = RuleKind::Onset;
    else if (row.fields[1] == "vowel")
      r.kind = RuleKind::Vowel;
    else if (row.fields[1] == "cluster_w")
      r.kind = RuleKind::ClusterW;
    else
      raise(errc::format_error, where + ": unknown rule kind " + row.fields[1]);
    r.source = row.fields[2] == "-" ? "" : row.fields[2];
    r.target = row.fields[3];
    if (row.fields[4] == "by_sound")
      r.policy = RulePolicy::SpellBySound;
    else if (row.fields[4] == "central")
      r.policy = RulePolicy::SpellCentral;
    else
      raise(errc::format_error, where + ": unknown policy " + row.fields[4]);
    if (row.fields.size() > 5 && !row.fields[5].empty() && row.fields[5] != "-")
      r.examples = split(row.fields[5], ',');
    out.add(std::move(r));
  }
  return out;
}

inline RuleSet load_rules_file(const std::string& path) {
  return load_rules(read_tsv_file(path), path);
}

// Applies a rule's sound rewrite to a parsed syllable; nullopt when the rule
// does not match or the rewritten form has no written shape.
inline std::optional<OrthoSyllable> rewrite_with_rule(const CorrespondenceRule& r,
                                                      const OrthoSyllable& s) {
  OrthoSyllable out = s;
  switch (r.kind) {
    case RuleKind::Onset: {
      if (s.leading_ho || s.leading_o || s.cluster_letter != 0) return std::nullopt;
      std::u32string src = utf8_decode(r.source);
      std::u32string dst = utf8_decode(r.target);
      if (src.size() != 1 || dst.size() != 1) return std::nullopt;
      if (s.onset_letter != src[0]) return std::nullopt;
      out.onset_letter = dst[0];
      break;
    }
    case RuleKind::Vowel: {
      auto src = vowel_pattern_from_id(r.source);
      auto dst = vowel_pattern_from_id(r.target);
      if (!src || !dst || s.vowel_pattern != *src) return std::nullopt;
      out.vowel_pattern = *dst;
      out.vowel_length = vowel_pattern_info(*dst).length;
      break;
    }
    case RuleKind::ClusterW: {
      if (s.cluster_letter != U'ว' || s.false_cluster) return std::nullopt;
      if (s.vowel_pattern != VowelPattern::A && s.vowel_pattern != VowelPattern::AA)
        return std::nullopt;
      auto dst = vowel_pattern_from_id(r.target);
      if (!dst) return std::nullopt;
      out.cluster_letter = 0;
      out.vowel_pattern = *dst;
      out.vowel_length = vowel_pattern_info(*dst).length;
      break;
    }
  }
  out.unreduced_vowel = false;
  out.tail_raw.clear();
  try {
    render_syllable(out);
  } catch (const error&) {
    return std::nullopt;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spelling decisions

struct SpellingDecision {
  std::string input;
  WordOrigin origin = WordOrigin::ThaiCognate;
  std::string spelling;
  std::vector<std::string> alternatives;
  std::vector<std::string> trail;  // ordered rule/step ids, origin routing first
};

struct OrthoViolation {
  std::string rule;
  std::string message;
};

class Orthography {
 public:
  Orthography(const Lexicon& lexicon, const G2p& g2p)
      : lexicon_(&lexicon), g2p_(&g2p), rules_(builtin_rules()) {}

  void set_rules(RuleSet rules) { rules_ = std::move(rules); }
  const RuleSet& rules() const { return rules_; }
  void set_central_words(std::set<std::string> words) { central_words_ = std::move(words); }
  void set_loan_exceptions(std::map<std::string, std::string> m) {
    loan_exceptions_ = std::move(m);
  }

  // -------------------------------------------------------------------------
  // Origin classification

  struct OriginDecision {
    WordOrigin origin;
    bool low_confidence = false;
    std::string reason;
  };

  OriginDecision classify_origin(const std::string& word) const {
    if (word.empty()) raise(errc::empty_input, "classify_origin on empty word");
    auto entries = lexicon_->lookup(word);
    if (!entries.empty()) return {entries.front()->origin, false, "lexicon"};

    // Fallback diagnostics from the spelling shape; these are observations,
    // not rules, so the result is marked low-confidence.
    std::u32string cps = normalize_thai(utf8_decode(word));
    for (char32_t cp : cps)
      if (cp == k_thanthakhat)
        return {WordOrigin::Loanword, true, "heuristic:garan"};
    for (size_t i = 0; i + 1 < cps.size(); ++i)
      if (is_false_cluster(cps[i], cps[i + 1]))
        return {WordOrigin::Loanword, true, "heuristic:false-cluster"};
    try {
      OrthoSyllable s = parse_syllable(word);
      if (s.coda_letter != 0 && !is_regular_coda_letter(s.coda_letter))
        return {WordOrigin::Loanword, true, "heuristic:irregular-coda"};
    } catch (const error&) {
      if (!cps.empty() && is_thai_consonant(cps.back()) && cps.back() != U'อ' &&
          !is_regular_coda_letter(cps.back()))
        return {WordOrigin::Loanword, true, "heuristic:irregular-coda"};
    }
    return {WordOrigin::ThaiCognate, true, "heuristic:default"};
  }

  // -------------------------------------------------------------------------
  // Correspondence application

  struct CorrespondenceResult {
    std::string text;
    const CorrespondenceRule* rule = nullptr;  // null when no rule fired
  };

  CorrespondenceResult apply_correspondence_ex(
      const std::string& central,
      const std::optional<Pronunciation>& pronunciation = std::nullopt) const {
    OrthoSyllable s;
    try {
      s = parse_syllable(central);
    } catch (const error&) {
      return {central, nullptr};  // multi-syllable or unparseable: left as is
    }

    struct Match {
      const CorrespondenceRule* rule;
      std::string rendered;
    };
    std::vector<Match> matches;
    for (const auto& rule : rules_.rules())
      if (auto rw = rewrite_with_rule(rule, s))
        matches.push_back({&rule, render_syllable(*rw)});
    if (matches.empty()) return {central, nullptr};

    // Which correspondence a word undergoes is lexical (รัก can go ร→ฮ or
    // ร→ล), so a rule only fires on sound evidence or on its own word list.
    const Match* chosen = nullptr;
    if (pronunciation) {
      // The rewrite is the phonetic form of the rule's Isan sound; pick the
      // rule whose sound agrees with what the speaker actually said.
      for (const auto& m : matches) {
        try {
          if (g2p_->phonemize_word(m.rendered, Lexicon{}) == *pronunciation) {
            chosen = &m;
            break;
          }
        } catch (const error&) {
        }
      }
    } else {
      for (const auto& m : matches)
        if (std::find(m.rule->examples.begin(), m.rule->examples.end(), central) !=
            m.rule->examples.end()) {
          chosen = &m;
          break;
        }
    }
    if (!chosen) return {central, nullptr};

    if (chosen->rule->policy == RulePolicy::SpellBySound) return {chosen->rendered, chosen->rule};
    return {central, chosen->rule};
  }

  std::string apply_correspondence(
      const std::string& central,
      const std::optional<Pronunciation>& pronunciation = std::nullopt) const {
    return apply_correspondence_ex(central, pronunciation).text;
  }

  // -------------------------------------------------------------------------
  // Inverse-box spelling derivation

  SpellingDecision derive_spelling(const PhoneticSyllable& pron,
                                   const std::optional<std::string>& etymon = std::nullopt) const {
    SpellingDecision d;
    d.input = to_string(pron);
    d.origin = WordOrigin::IsanNative;
    d.trail.push_back("origin:IsanNative");

    std::string onset_key;
    for (const auto& p : pron.onset) onset_key += p;

    Rime rime = rime_of(pron);
    std::vector<OrthoSyllable> candidates =
        candidate_spellings(onset_key, rime, ToneCategory{pron.tone, ""}, g2p_->tone_box());
    candidates = renderable(candidates);
    if (candidates.empty()) {
      // Length ambiguity: fall back to the written long-vowel form rather
      // than violate the reduction rules (the ซ้วน case).
      if (auto longer = lengthened(rime)) {
        candidates = renderable(
            candidate_spellings(onset_key, *longer, ToneCategory{pron.tone, ""}, g2p_->tone_box()));
        if (!candidates.empty()) d.trail.push_back("tiebreak:length-adjusted");
      }
    }
    if (candidates.empty())
      raise(errc::no_candidate, "no spelling realizes " + to_string(pron));
    for (const auto& c : candidates) d.alternatives.push_back(render_syllable(c));
    d.trail.push_back("inverse-box:" + std::to_string(candidates.size()) + "-candidates");

    // (a) drop spellings that collide with existing Central Thai words, when
    // alternatives remain.
    if (candidates.size() > 1 && !central_words_.empty()) {
      std::vector<OrthoSyllable> kept;
      for (const auto& c : candidates)
        if (!central_words_.count(render_syllable(c))) kept.push_back(c);
      if (!kept.empty() && kept.size() < candidates.size()) {
        candidates = kept;
        d.trail.push_back("tiebreak:central-collision");
      }
    }

    // (b) prefer the form visually traceable to the etymon.
    if (candidates.size() > 1 && etymon) {
      try {
        OrthoSyllable e = parse_syllable(*etymon);
        auto onset_group = [](const OrthoSyllable& s) {
          std::u32string g;
          if (s.leading_ho) g.push_back(U'ห');
          if (s.leading_o) g.push_back(U'อ');
          g.push_back(s.onset_letter);
          if (s.cluster_letter) g.push_back(s.cluster_letter);
          return g;
        };
        auto score = [&](const OrthoSyllable& c) {
          if (onset_group(c) == onset_group(e)) return 2;
          if (c.onset_letter == e.onset_letter) return 1;
          return 0;
        };
        int best = 0;
        for (const auto& c : candidates) best = std::max(best, score(c));
        if (best > 0) {
          std::vector<OrthoSyllable> kept;
          for (const auto& c : candidates)
            if (score(c) == best) kept.push_back(c);
          if (kept.size() < candidates.size()) {
            candidates = kept;
            d.trail.push_back("tiebreak:etymon");
          }
        }
      } catch (const error&) {
      }
    }

    // (c) else prefer the high-class letter, then the leading-ห form.
    if (candidates.size() > 1) {
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const OrthoSyllable& a, const OrthoSyllable& b) {
                         auto rank = [](const OrthoSyllable& s) {
                           if (effective_class(s) != ConsonantClass::High) return 2;
                           return s.leading_ho ? 1 : 0;
                         };
                         return rank(a) < rank(b);
                       });
      d.trail.push_back("tiebreak:prefer-high");
    }

    d.spelling = render_syllable(candidates.front());
    return d;
  }

  // -------------------------------------------------------------------------
  // Top-level routing (the spelling flowchart)

  SpellingDecision spell(const std::string& word, WordOrigin origin,
                         const std::optional<Pronunciation>& pronunciation = std::nullopt,
                         const std::optional<std::string>& etymon = std::nullopt) const {
    if (word.empty()) raise(errc::empty_input, "spell on empty word");
    SpellingDecision d;
    d.input = word;
    d.origin = origin;
    d.trail.push_back(std::string("origin:") + to_string(origin));

    switch (origin) {
      case WordOrigin::ProperName:
        d.spelling = word;
        d.trail.push_back("proper-name:keep-central");
        break;
      case WordOrigin::Loanword: {
        auto it = loan_exceptions_.find(word);
        if (it != loan_exceptions_.end()) {
          d.spelling = it->second;
          d.trail.push_back("loanword:exception");
        } else {
          d.spelling = word;
          d.trail.push_back("loanword:keep-central");
        }
        break;
      }
      case WordOrigin::ThaiCognate: {
        auto res = apply_correspondence_ex(word, pronunciation);
        d.spelling = res.text;
        d.trail.push_back(res.rule ? "correspondence:" + res.rule->id : "correspondence:none");
        break;
      }
      case WordOrigin::IsanNative: {
        if (lexicon_->contains(word)) {
          d.spelling = word;
          const LexiconEntry* e = lexicon_->lookup(word).front();
          d.trail.push_back(e->dictionary_attested ? "lexicon:dictionary-attested"
                                                   : "lexicon:listed");
          break;
        }
        if (!pronunciation || pronunciation->empty())
          raise(errc::missing_pronunciation,
                "\"" + word + "\" is not in the lexicon; the inverse box needs a pronunciation");
        std::string spelled;
        for (const auto& syl : *pronunciation) {
          SpellingDecision part = derive_spelling(syl, etymon);
          spelled += part.spelling;
          for (const auto& t : part.trail)
            if (t.rfind("origin:", 0) != 0) d.trail.push_back(t);
          if (pronunciation->size() == 1) d.alternatives = part.alternatives;
        }
        d.spelling = spelled;
        break;
      }
    }
    return d;
  }

  // -------------------------------------------------------------------------
  // Orthographic constraints

  std::vector<OrthoViolation> check_orthographic_constraints(const std::string& text) const {
    std::vector<OrthoViolation> out;
    for (const auto& token : tokenize(text)) {
      std::u32string cps = normalize_thai(utf8_decode(token));
      bool has_taikhu = false, has_mark = false;
      for (char32_t cp : cps) {
        has_taikhu |= cp == U'็';
        has_mark |= is_tone_mark_cp(cp);
      }
      if (has_taikhu && has_mark)
        out.push_back({"maitaikhu-with-tone-mark",
                       token + ": mai taikhu cannot combine with a tone mark"});

      OrthoSyllable s = parse_syllable(token);  // NotASyllable propagates
      if (s.unreduced_vowel)
        out.push_back({"unreduced-vowel",
                       token + ": vowel must take its reduced written form before a coda"});
      if ((s.tone_mark == ToneMark::MaiTri || s.tone_mark == ToneMark::MaiChattawa) &&
          effective_class(s) != ConsonantClass::Mid)
        out.push_back({"tri-chattawa-on-non-mid",
                       token + ": mai tri / mai chattawa are reserved for mid-class onsets"});
    }
    return out;
  }

 private:
  static std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
      if (ch == ' ' || ch == '\t' || ch == '-') {
        if (!cur.empty()) out.push_back(std::move(cur));
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
  }

  static std::vector<OrthoSyllable> renderable(std::vector<OrthoSyllable> candidates) {
    std::vector<OrthoSyllable> out;
    for (auto& c : candidates) {
      try {
        render_syllable(c);
        out.push_back(std::move(c));
      } catch (const error&) {
      }
    }
    return out;
  }

  static Rime rime_of(const PhoneticSyllable& pron) {
    Rime rime;
    const std::string& n = pron.nucleus;
    if (n == "a" && (pron.coda == "m" || pron.coda == "j" || pron.coda == "w")) {
      // ำ ไ- เ-า carry their own codas.
      rime.pattern = pron.coda == "m" ? VowelPattern::AM
                    : pron.coda == "j" ? VowelPattern::AI
                                       : VowelPattern::AO;
      rime.coda_letter = 0;
      return rime;
    }
    auto pattern = pattern_of_nucleus(n);
    if (!pattern)
      raise(errc::no_candidate, "no written pattern for nucleus " + n);
    rime.pattern = *pattern;
    rime.coda_letter = pron.coda == "ʔ" ? 0 : coda_letter_of(pron.coda);
    return rime;
  }

  static std::optional<VowelPattern> pattern_of_nucleus(std::string_view n) {
    using VP = VowelPattern;
    static const std::pair<std::string_view, VP> table[] = {
        {"a", VP::A}, {"aː", VP::AA}, {"i", VP::I}, {"iː", VP::II}, {"ɯ", VP::UE},
        {"ɯː", VP::UEE}, {"u", VP::U}, {"uː", VP::UU}, {"e", VP::E}, {"eː", VP::EE},
        {"ɛ", VP::AE}, {"ɛː", VP::AAE}, {"o", VP::O}, {"oː", VP::OO}, {"ɔ", VP::AW},
        {"ɔː", VP::AAW}, {"ɤ", VP::OE}, {"ɤː", VP::OEE}, {"ia", VP::IA}, {"ɯa", VP::UEA},
        {"ua", VP::UA},
    };
    for (auto& [k, v] : table)
      if (k == n) return v;
    return std::nullopt;
  }

  static char32_t coda_letter_of(const std::string& coda) {
    if (coda.empty()) return 0;
    static const std::pair<std::string_view, char32_t> table[] = {
        {"m", U'ม'}, {"n", U'น'}, {"ŋ", U'ง'}, {"j", U'ย'}, {"w", U'ว'},
        {"p̚", U'บ'}, {"t̚", U'ด'}, {"k̚", U'ก'},
    };
    for (auto& [k, v] : table)
      if (k == coda) return v;
    raise(errc::no_candidate, "no coda letter for phoneme " + coda);
  }

  static std::optional<Rime> lengthened(const Rime& rime) {
    using VP = VowelPattern;
    static const std::pair<VP, VP> pairs[] = {
        {VP::A, VP::AA}, {VP::I, VP::II}, {VP::UE, VP::UEE}, {VP::U, VP::UU},
        {VP::E, VP::EE}, {VP::AE, VP::AAE}, {VP::O, VP::OO}, {VP::AW, VP::AAW},
        {VP::OE, VP::OEE}, {VP::IA_SHORT, VP::IA},
    };
    for (auto& [s, l] : pairs)
      if (rime.pattern == s) return Rime{l, rime.coda_letter};
    return std::nullopt;
  }

  const Lexicon* lexicon_;
  const G2p* g2p_;
  RuleSet rules_;
  std::set<std::string> central_words_;
  std::map<std::string, std::string> loan_exceptions_;
};

}  // namespace isan
