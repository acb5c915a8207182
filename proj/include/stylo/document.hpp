#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stylo {

struct Token {
  int index = 0;  // 1-based within the sentence
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos;  // "_" when absent
  std::map<std::string, std::string> feats;
  int head = 0;  // 0 = root
  std::string deprel;
  std::string deps = "_";
  std::string misc = "_";
  bool is_alphabetic = false;

  /// Value of a morphological feature, or empty view when absent.
  std::string_view feat(std::string_view key) const;
  bool is_punct() const { return upos == "PUNCT" || upos == "SYM"; }
  /// Universal relation without its subtype ("nmod:poss" -> "nmod").
  std::string_view base_deprel() const;

  friend bool operator==(const Token&, const Token&) = default;
};

/// A multiword-token range line ("3-4 don't ...") kept only for round-tripping.
struct MultiwordToken {
  int first = 0;
  int last = 0;
  std::string form;
  std::string misc = "_";
  friend bool operator==(const MultiwordToken&, const MultiwordToken&) = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::vector<MultiwordToken> multiwords;
  std::vector<std::string> comments;  // without the leading "# ", newpar/newdoc excluded
  int sent_index = 0;
  int paragraph_index = 0;
  bool starts_paragraph = false;  // carried a "# newpar" comment

  std::size_t size() const { return tokens.size(); }
  const Token& at(int index) const { return tokens.at(static_cast<std::size_t>(index - 1)); }
  /// 1-based index of the head-0 token.
  int root() const;
  /// Children lists indexed by 1-based token index (slot 0 holds the root's children).
  std::vector<std::vector<int>> children() const;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Document {
  std::string doc_id;
  std::vector<Sentence> sentences;
  std::optional<std::string> class_label;
  std::optional<double> human_rating;
  int token_count = 0;  // alphabetic tokens
  int sentence_count = 0;
  int paragraph_count = 0;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Letters with internal apostrophes or hyphens; non-ASCII bytes count as letters.
bool is_alphabetic_form(std::string_view form);

/// ASCII lowercase copy.
std::string lowercase(std::string_view s);

/// Recomputes token_count, sentence_count and paragraph_count from the sentences.
void refresh_counts(Document& doc);

}  // namespace stylo
