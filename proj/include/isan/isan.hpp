#pragma once

// Isan-language text toolkit: Thai-script syllable parsing, Gedney tone
// boxes, the spelling standard, transcript-convention checks, and
// grapheme-to-phoneme conversion with pronunciation dictionaries.

#include "isan/error.hpp"
#include "isan/g2p.hpp"
#include "isan/lexicon.hpp"
#include "isan/orthography.hpp"
#include "isan/script.hpp"
#include "isan/thai_text.hpp"
#include "isan/tonebox.hpp"
#include "isan/toolkit.hpp"
#include "isan/transcript.hpp"
#include "isan/tsv.hpp"
