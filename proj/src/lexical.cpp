#include "stylo/lexical.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace stylo::lexical {
namespace {

bool is_vowel(char c) {
  switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y': return true;
    default: return false;
  }
}

bool is_content(const Token& t) {
  return t.upos == "NOUN" || t.upos == "VERB" || t.upos == "ADJ" || t.upos == "ADV";
}

// Lowercased lemma, falling back to the form when the lemma is unannotated.
std::string lemma_key(const Token& t) {
  return (t.lemma.empty() || t.lemma == "_") ? lowercase(t.form) : lowercase(t.lemma);
}

template <typename Set>
bool in_list(const Set& list, const Token& t) {
  if (list.count(lowercase(t.form))) return true;
  return !t.lemma.empty() && t.lemma != "_" && list.count(lowercase(t.lemma));
}

std::optional<double> mean_overlap(const Document& doc, int window) {
  const auto n = doc.sentences.size();
  if (n < static_cast<std::size_t>(window)) return std::nullopt;
  std::vector<std::set<std::string>> content(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : doc.sentences[i].tokens)
      if (is_content(t)) content[i].insert(lemma_key(t));

  double sum = 0;
  int windows = 0;
  for (std::size_t i = 0; i + static_cast<std::size_t>(window) <= n; ++i) {
    const auto& head = content[i];
    if (head.empty()) continue;
    std::size_t shared = 0;
    for (const auto& lemma : head) {
      for (std::size_t j = i + 1; j < i + static_cast<std::size_t>(window); ++j) {
        if (content[j].count(lemma)) {
          ++shared;
          break;
        }
      }
    }
    sum += static_cast<double>(shared) / static_cast<double>(head.size());
    ++windows;
  }
  if (windows == 0) return std::nullopt;
  return sum / windows;
}

}  // namespace

int syllable_count(std::string_view word) {
  int groups = 0;
  bool in_group = false;
  for (char c : lowercase(word)) {
    bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

FeatureProfile compute_diversity(const Document& doc, const Options& opts) {
  using namespace feature;
  FeatureProfile p;
  if (doc.token_count == 0) {
    for (const char* id : {kDTextualValue, kHapaxRatio, kLexicalOverlap2, kLexicalOverlap3}) p.mark_missing(id);
    return p;
  }

  std::unordered_map<std::string, int> freq;
  struct Paragraph {
    int tokens = 0;
    int polysyllabic = 0;
    std::unordered_set<std::string> types;
  };
  std::map<int, Paragraph> paragraphs;
  for (const auto& s : doc.sentences) {
    auto& par = paragraphs[s.paragraph_index];
    for (const auto& t : s.tokens) {
      if (!t.is_alphabetic) continue;
      auto lower = lowercase(t.form);
      ++freq[lower];
      ++par.tokens;
      if (syllable_count(lower) >= 3) ++par.polysyllabic;
      par.types.insert(std::move(lower));
    }
  }

  int hapax = 0;
  for (const auto& [w, c] : freq) hapax += c == 1 ? 1 : 0;
  p.set(kHapaxRatio, static_cast<double>(hapax) / doc.token_count);

  double sum = 0;
  int counted = 0;
  for (const auto& [idx, par] : paragraphs) {
    if (par.tokens == 0) continue;
    const double types = static_cast<double>(par.types.size());
    const double n = par.tokens;
    sum += opts.d_textual == DTextualFormula::ParagraphPolysyllabic ? types * (1.0 + par.polysyllabic / n)
                                                                   : types / n;
    ++counted;
  }
  p.set(kDTextualValue, sum / counted);

  for (auto [id, k] : {std::pair{kLexicalOverlap2, 2}, std::pair{kLexicalOverlap3, 3}}) {
    if (auto v = mean_overlap(doc, k))
      p.set(id, *v);
    else
      p.mark_missing(id);
  }
  return p;
}

FeatureProfile compute_range_concreteness(const Document& doc, const LexicalResources& res) {
  using namespace feature;
  FeatureProfile p;
  if (doc.token_count == 0) {
    for (const char* id : {kLr1, kLr2, kLr3, kConcreteness}) p.mark_missing(id);
    return p;
  }
  int tier[3] = {0, 0, 0};
  double conc_sum = 0;
  int conc_n = 0;
  for (const auto& s : doc.sentences) {
    for (const auto& t : s.tokens) {
      if (!t.is_alphabetic) continue;
      tier[0] += in_list(res.gsl1000, t) ? 1 : 0;
      tier[1] += in_list(res.gsl2000, t) ? 1 : 0;
      tier[2] += in_list(res.awl, t) ? 1 : 0;
      auto it = res.concreteness.find(lowercase(t.form));
      if (it == res.concreteness.end() && !t.lemma.empty() && t.lemma != "_")
        it = res.concreteness.find(lowercase(t.lemma));
      if (it != res.concreteness.end()) {
        conc_sum += it->second;
        ++conc_n;
      }
    }
  }
  const double n = doc.token_count;
  p.set(kLr1, tier[0] / n);
  p.set(kLr2, tier[1] / n);
  p.set(kLr3, tier[2] / n);
  if (conc_n > 0)
    p.set(kConcreteness, conc_sum / conc_n);
  else
    p.mark_missing(kConcreteness);
  return p;
}

FeatureProfile compute_pos_ratios(const Document& doc, const LexicalResources& res) {
  using namespace feature;
  FeatureProfile p;
  const std::array ids{kNounPronounRatio,     kDeicticArticleRatio, kDefiniteArticleFreq, kAttributiveAdjFreq,
                       kEmphaticParticleFreq, kDemonstrativeFreq,   kFirstPersonRatio};
  if (doc.token_count == 0 || doc.sentence_count == 0) {
    for (const char* id : ids) p.mark_missing(id);
    return p;
  }

  int nouns = 0, pronouns = 0, first_person = 0, deictics = 0, articles = 0;
  int definite = 0, attributive = 0, emphatic = 0, demonstrative = 0;
  for (const auto& s : doc.sentences) {
    for (const auto& t : s.tokens) {
      const auto lemma = lowercase(t.lemma);
      if (t.upos == "NOUN" || t.upos == "PROPN") ++nouns;
      if (t.upos == "PRON") {
        ++pronouns;
        if (t.feat("Person") == "1") ++first_person;
      }
      if (t.upos == "DET") {
        const bool article = !t.feat("Definite").empty() || lemma == "a" || lemma == "an" || lemma == "the";
        if (article) ++articles;
        if (t.feat("Definite") == "Def" || lemma == "the") ++definite;
      }
      if (t.upos == "ADJ" && t.deprel == "amod") ++attributive;
      if (t.feat("PronType") == "Dem") ++demonstrative;
      const auto form = lowercase(t.form);
      if (res.deictics.count(form)) ++deictics;
      if (res.emphatics.count(form)) ++emphatic;
    }
  }
  const double sentences = doc.sentence_count;
  p.set(kNounPronounRatio, static_cast<double>(nouns) / std::max(pronouns, 1));
  p.set(kDeicticArticleRatio, static_cast<double>(deictics) / std::max(articles, 1));
  p.set(kDefiniteArticleFreq, definite / sentences);
  p.set(kAttributiveAdjFreq, attributive / sentences);
  p.set(kEmphaticParticleFreq, emphatic / sentences);
  p.set(kDemonstrativeFreq, demonstrative / sentences);
  p.set(kFirstPersonRatio, static_cast<double>(first_person) / std::max(pronouns, 1));
  return p;
}

FeatureProfile count_connectives(const Document& doc, const LexicalResources& res, const Options& opts) {
  FeatureProfile p;
  std::array<int, 8> counts{};
  auto slot = [](const Connective& c) {
    return static_cast<std::size_t>(c.category) * 2 + (c.polarity == Polarity::Positive ? 0 : 1);
  };

  // Phrases bucketed by first word; longest first so the first hit is the longest match.
  std::unordered_map<std::string, std::vector<const Connective*>> by_first;
  for (const auto& c : res.connectives) by_first[c.phrase.front()].push_back(&c);
  for (auto& [w, list] : by_first)
    std::stable_sort(list.begin(), list.end(),
                     [](const Connective* a, const Connective* b) { return a->phrase.size() > b->phrase.size(); });

  for (const auto& s : doc.sentences) {
    std::vector<std::string> words;
    for (const auto& t : s.tokens)
      if (!t.is_punct()) words.push_back(lowercase(t.form));
    std::size_t i = 0;
    while (i < words.size()) {
      const Connective* hit = nullptr;
      if (auto it = by_first.find(words[i]); it != by_first.end()) {
        for (const auto* c : it->second) {
          if (i + c->phrase.size() > words.size()) continue;
          if (std::equal(c->phrase.begin(), c->phrase.end(), words.begin() + static_cast<std::ptrdiff_t>(i))) {
            hit = c;
            break;
          }
        }
      }
      if (hit) {
        ++counts[slot(*hit)];
        i += hit->phrase.size();
      } else {
        ++i;
      }
    }
  }

  const auto& ids = feature::connective_ids();
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (opts.connectives == ConnectiveNorm::PerSentence) {
      if (doc.sentence_count == 0)
        p.mark_missing(ids[k]);
      else
        p.set(ids[k], static_cast<double>(counts[k]) / doc.sentence_count);
    } else {
      if (doc.token_count == 0)
        p.mark_missing(ids[k]);
      else
        p.set(ids[k], 1000.0 * counts[k] / doc.token_count);
    }
  }
  return p;
}

FeatureProfile compute_all(const Document& doc, const LexicalResources& res, const Options& opts) {
  FeatureProfile p = compute_diversity(doc, opts);
  p.merge(compute_range_concreteness(doc, res));
  p.merge(compute_pos_ratios(doc, res));
  p.merge(count_connectives(doc, res, opts));
  return p;
}

}  // namespace stylo::lexical
