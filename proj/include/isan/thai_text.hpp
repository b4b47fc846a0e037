#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "isan/error.hpp"

// Thai codepoint utilities: UTF-8 transcoding, character classification and
// the static consonant tables everything else is built on.

namespace isan {

// ---------------------------------------------------------------------------
// UTF-8

inline std::u32string utf8_decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      raise(errc::encoding_error, "invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > s.size()) raise(errc::encoding_error, "truncated UTF-8 sequence");
    for (size_t k = 1; k < len; ++k) {
      unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) raise(errc::encoding_error, "invalid UTF-8 continuation byte");
      cp = (cp << 6) | (b & 0x3F);
    }
    if (len == 2 && cp < 0x80) raise(errc::encoding_error, "overlong UTF-8 sequence");
    if (len == 3 && cp < 0x800) raise(errc::encoding_error, "overlong UTF-8 sequence");
    if (len == 4 && cp < 0x10000) raise(errc::encoding_error, "overlong UTF-8 sequence");
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      raise(errc::encoding_error, "invalid codepoint");
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void utf8_append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string utf8_encode(std::u32string_view s) {
  std::string out;
  out.reserve(s.size() * 3);
  for (char32_t cp : s) utf8_append(out, cp);
  return out;
}

inline std::string utf8_encode(char32_t cp) {
  std::string out;
  utf8_append(out, cp);
  return out;
}

// ---------------------------------------------------------------------------
// Codepoint classification

inline constexpr char32_t k_thai_block_begin = 0x0E00;
inline constexpr char32_t k_thai_block_end = 0x0E7F;

inline bool is_thai(char32_t cp) { return cp >= k_thai_block_begin && cp <= k_thai_block_end; }

// ก (U+0E01) .. ฮ (U+0E2E). The range includes the vocalics ฤ ฦ.
inline bool is_thai_consonant(char32_t cp) { return cp >= U'ก' && cp <= U'ฮ'; }

inline bool is_thai_digit(char32_t cp) { return cp >= U'๐' && cp <= U'๙'; }

inline bool is_preposed_vowel(char32_t cp) {
  return cp == U'เ' || cp == U'แ' || cp == U'โ' || cp == U'ใ' || cp == U'ไ';
}

// Above/below vowel signs plus mai taikhu; tone marks are kept separate.
inline bool is_vowel_sign(char32_t cp) {
  switch (cp) {
    case U'ั':
    case U'ิ':
    case U'ี':
    case U'ึ':
    case U'ื':
    case U'ุ':
    case U'ู':
    case U'็':
      return true;
    default:
      return false;
  }
}

inline bool is_trailing_vowel(char32_t cp) {
  return cp == U'ะ' || cp == U'า' || cp == U'ำ';
}

inline bool is_tone_mark_cp(char32_t cp) { return cp >= U'่' && cp <= U'๋'; }

inline constexpr char32_t k_thanthakhat = U'์';  // garan, silences its base
inline constexpr char32_t k_maiyamok = U'ๆ';
inline constexpr char32_t k_paiyannoi = U'ฯ';
inline constexpr char32_t k_nikhahit = 0x0E4D;

inline bool is_combining_cp(char32_t cp) {
  return is_vowel_sign(cp) || is_tone_mark_cp(cp) || cp == k_thanthakhat ||
         cp == k_nikhahit || cp == 0x0E3A /* phinthu */;
}

// ---------------------------------------------------------------------------
// Consonant classes (ไตรยางค์)

enum class ConsonantClass { High, Mid, Low };

inline const char* to_string(ConsonantClass c) {
  switch (c) {
    case ConsonantClass::High: return "High";
    case ConsonantClass::Mid: return "Mid";
    case ConsonantClass::Low: return "Low";
  }
  return "?";
}

inline std::optional<ConsonantClass> consonant_class_from_string(std::string_view s) {
  if (s == "High") return ConsonantClass::High;
  if (s == "Mid") return ConsonantClass::Mid;
  if (s == "Low") return ConsonantClass::Low;
  return std::nullopt;
}

// Total over U+0E01..U+0E2E. ฤ ฦ behave like ร ล and are classed Low.
inline ConsonantClass consonant_class(char32_t cp) {
  switch (cp) {
    case U'ก': case U'จ': case U'ฎ': case U'ฏ': case U'ด':
    case U'ต': case U'บ': case U'ป': case U'อ':
      return ConsonantClass::Mid;
    case U'ข': case U'ฃ': case U'ฉ': case U'ฐ': case U'ถ':
    case U'ผ': case U'ฝ': case U'ศ': case U'ษ': case U'ส': case U'ห':
      return ConsonantClass::High;
    default:
      if (!is_thai_consonant(cp))
        raise(errc::non_thai, "not a Thai consonant: U+" + std::to_string(static_cast<uint32_t>(cp)));
      return ConsonantClass::Low;
  }
}

// Low-class sonorants that a silent leading ห lifts to high-class behaviour.
inline bool is_ho_nam_target(char32_t cp) {
  switch (cp) {
    case U'ง': case U'ญ': case U'ณ': case U'น': case U'ม':
    case U'ย': case U'ร': case U'ล': case U'ว': case U'ฬ':
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Coda sound classes (มาตราตัวสะกด)

enum class CodaSound { None, M, N, Ng, J, W, P, T, K, Glottal };

inline bool coda_is_stop(CodaSound c) {
  return c == CodaSound::P || c == CodaSound::T || c == CodaSound::K || c == CodaSound::Glottal;
}

// Sound class of a consonant letter in coda position.
inline CodaSound coda_sound_of_letter(char32_t cp) {
  switch (cp) {
    case U'ม':
      return CodaSound::M;
    case U'น': case U'ณ': case U'ญ': case U'ร': case U'ล': case U'ฬ':
      return CodaSound::N;
    case U'ง':
      return CodaSound::Ng;
    case U'ย':
      return CodaSound::J;
    case U'ว':
      return CodaSound::W;
    case U'บ': case U'ป': case U'พ': case U'ฟ': case U'ภ':
      return CodaSound::P;
    case U'ก': case U'ข': case U'ค': case U'ฆ':
      return CodaSound::K;
    default:
      if (!is_thai_consonant(cp))
        raise(errc::non_thai, "not a Thai consonant");
      // Everything else spells แม่กด.
      return CodaSound::T;
  }
}

// Coda letters that follow the regular spelling rule (ตรงตามมาตรา); loanwords
// tend to use letters outside this set.
inline bool is_regular_coda_letter(char32_t cp) {
  switch (cp) {
    case U'ก': case U'ด': case U'บ': case U'น': case U'ม':
    case U'ง': case U'ย': case U'ว':
      return true;
    default:
      return false;
  }
}

// Normalizes the few composed/decomposed variants that occur in real Thai
// input: double เ for แ and nikhahit+าา for ำ. NFC proper is the identity on
// the Thai block, so this is all "composed form" requires.
inline std::u32string normalize_thai(std::u32string_view in) {
  std::u32string out;
  out.reserve(in.size());
  for (size_t i = 0; i < in.size(); ++i) {
    if (in[i] == U'เ' && i + 1 < in.size() && in[i + 1] == U'เ') {
      out.push_back(U'แ');
      ++i;
    } else if (in[i] == k_nikhahit && i + 1 < in.size() && in[i + 1] == U'า') {
      out.push_back(U'ำ');
      ++i;
    } else {
      out.push_back(in[i]);
    }
  }
  return out;
}

}  // namespace isan
