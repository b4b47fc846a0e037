#pragma once

#include <stdexcept>
#include <string>

namespace isan {

// Error conditions raised by the library. Validation-style operations
// (validate_*, check_*) report findings as values instead of throwing.
enum class errc {
  not_a_syllable,
  multi_syllable,
  non_thai,
  unrenderable,
  dead_with_mark,
  mark_out_of_box,
  illegal_mark,
  incomplete_box,
  unknown_onset,
  empty_input,
  missing_pronunciation,
  no_candidate,
  unmappable_letter,
  phonotactic_violation,
  segmentation_required,
  duplicate_primary,
  invalid_pronunciation,
  not_found,
  format_error,
  io_error,
  encoding_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_syllable: return "NotASyllable";
    case errc::multi_syllable: return "MultiSyllable";
    case errc::non_thai: return "NonThai";
    case errc::unrenderable: return "Unrenderable";
    case errc::dead_with_mark: return "DeadWithMark";
    case errc::mark_out_of_box: return "MarkOutOfBox";
    case errc::illegal_mark: return "IllegalMark";
    case errc::incomplete_box: return "IncompleteBox";
    case errc::unknown_onset: return "UnknownOnset";
    case errc::empty_input: return "EmptyInput";
    case errc::missing_pronunciation: return "MissingPronunciation";
    case errc::no_candidate: return "NoCandidate";
    case errc::unmappable_letter: return "UnmappableLetter";
    case errc::phonotactic_violation: return "PhonotacticViolation";
    case errc::segmentation_required: return "SegmentationRequired";
    case errc::duplicate_primary: return "DuplicatePrimary";
    case errc::invalid_pronunciation: return "InvalidPronunciation";
    case errc::not_found: return "NotFound";
    case errc::format_error: return "FormatError";
    case errc::io_error: return "IoError";
    case errc::encoding_error: return "EncodingError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace isan
