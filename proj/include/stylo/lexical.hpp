#pragma once

#include <string>

#include "stylo/document.hpp"
#include "stylo/registry.hpp"
#include "stylo/resources.hpp"

namespace stylo::lexical {

/// How d_textual_value is computed.
///   ParagraphPolysyllabic: mean over paragraphs of T(p) * (1 + S(p) / N(p)).
///   TypeToken: mean over paragraphs of T(p) / N(p) (plain TTR, for ablation).
enum class DTextualFormula { ParagraphPolysyllabic, TypeToken };

enum class ConnectiveNorm { PerSentence, Per1000Tokens };

struct Options {
  DTextualFormula d_textual = DTextualFormula::ParagraphPolysyllabic;
  ConnectiveNorm connectives = ConnectiveNorm::PerSentence;
};

/// Maximal groups of a/e/i/o/u/y in the lowercased word.
int syllable_count(std::string_view word);

/// d_textual_value, hapax_ratio, lexical_overlap_2, lexical_overlap_3.
FeatureProfile compute_diversity(const Document& doc, const Options& opts = {});

/// lr1, lr2, lr3 and concreteness.
FeatureProfile compute_range_concreteness(const Document& doc, const LexicalResources& res);

/// The seven part-of-speech ratio and frequency features.
FeatureProfile compute_pos_ratios(const Document& doc, const LexicalResources& res);

/// The eight conn_<category>_<polarity> features (longest-match scan).
FeatureProfile count_connectives(const Document& doc, const LexicalResources& res,
                                 const Options& opts = {});

/// All 23 lexical features.
FeatureProfile compute_all(const Document& doc, const LexicalResources& res, const Options& opts = {});

}  // namespace stylo::lexical
