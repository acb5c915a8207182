#include "stylo/document.hpp"

#include <algorithm>

namespace stylo {

std::string_view Token::feat(std::string_view key) const {
  auto it = feats.find(std::string(key));
  if (it == feats.end()) return {};
  return it->second;
}

std::string_view Token::base_deprel() const {
  std::string_view rel = deprel;
  auto colon = rel.find(':');
  return colon == std::string_view::npos ? rel : rel.substr(0, colon);
}

int Sentence::root() const {
  for (const auto& t : tokens)
    if (t.head == 0) return t.index;
  return 0;
}

std::vector<std::vector<int>> Sentence::children() const {
  std::vector<std::vector<int>> kids(tokens.size() + 1);
  for (const auto& t : tokens) kids[static_cast<std::size_t>(t.head)].push_back(t.index);
  return kids;
}

static bool is_letter_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

bool is_alphabetic_form(std::string_view form) {
  if (form.empty()) return false;
  if (!is_letter_byte(static_cast<unsigned char>(form.front())) ||
      !is_letter_byte(static_cast<unsigned char>(form.back())))
    return false;
  char prev = 'a';
  for (char ch : form) {
    auto c = static_cast<unsigned char>(ch);
    if (is_letter_byte(c)) {
      prev = ch;
      continue;
    }
    if (ch != '\'' && ch != '-') return false;
    if (prev == '\'' || prev == '-') return false;
    prev = ch;
  }
  return true;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
  });
  return out;
}

void refresh_counts(Document& doc) {
  int tokens = 0;
  int last_par = -1;
  for (const auto& s : doc.sentences) {
    for (const auto& t : s.tokens)
      if (t.is_alphabetic) ++tokens;
    last_par = std::max(last_par, s.paragraph_index);
  }
  doc.token_count = tokens;
  doc.sentence_count = static_cast<int>(doc.sentences.size());
  doc.paragraph_count = last_par + 1;
}

}  // namespace stylo
