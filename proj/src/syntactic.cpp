#include "stylo/syntactic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace stylo::syntactic {
namespace {

bool has_lemma(const Token& t, std::initializer_list<std::string_view> lemmas) {
  auto l = lowercase(t.lemma);
  return std::find(lemmas.begin(), lemmas.end(), l) != lemmas.end();
}

// -ing forms: UD English annotates them either as VerbForm=Ger or as
// VerbForm=Part with Tense=Pres depending on treebank version.
bool is_ing_form(const Token& t) {
  return t.feat("VerbForm") == "Ger" || (t.feat("VerbForm") == "Part" && t.feat("Tense") == "Pres");
}

bool is_past_participle(const Token& t) { return t.feat("VerbForm") == "Part" && t.feat("Tense") != "Pres"; }

bool is_group_head(const Token& t) {
  if (t.upos == "VERB") return true;
  if (t.upos != "AUX") return false;
  auto rel = t.base_deprel();
  return rel != "aux" && rel != "cop";
}

bool is_clausal(const Token& t, const std::set<std::string>& rels) {
  return rels.count(t.deprel) > 0 || rels.count(std::string(t.base_deprel())) > 0;
}

}  // namespace

std::string schema_name(Tense t) {
  switch (t) {
    case Tense::Present: return "Present";
    case Tense::Past: return "Past";
    case Tense::Future: return "Future";
    case Tense::Progressive: return "Progressive";
    case Tense::Participle: return "Participle";
    case Tense::Infinitive: return "Inf";
    case Tense::Other: return "Other";
  }
  return "Other";
}

Tense composite_tense(const Sentence& s, int head, const std::vector<int>& aux) {
  const Token& h = s.at(head);
  for (int a : aux)
    if (has_lemma(s.at(a), {"will", "shall"})) return Tense::Future;
  for (int a : aux) {
    const Token& t = s.at(a);
    if (is_ing_form(h) && has_lemma(t, {"be"}) && t.feat("Tense") == "Pres") return Tense::Progressive;
    if (is_past_participle(h) && has_lemma(t, {"have"}) && (t.feat("Tense") == "Pres" || t.feat("Tense") == "Past"))
      return Tense::Past;
    if (is_ing_form(h) && has_lemma(t, {"be"}) && t.feat("Tense") == "Past") return Tense::Past;
  }
  if (!aux.empty()) return Tense::Other;
  const auto form = h.feat("VerbForm");
  if (form == "Part") return Tense::Participle;
  if (form == "Inf") return Tense::Infinitive;
  if (form == "Ger") return Tense::Other;
  if (h.feat("Tense") == "Pres") return Tense::Present;
  if (h.feat("Tense") == "Past") return Tense::Past;
  return Tense::Other;
}

std::vector<VerbGroup> unify_verb_groups(const Sentence& sentence) {
  std::vector<VerbGroup> groups;
  std::vector<int> group_of(sentence.size() + 1, -1);
  for (const auto& t : sentence.tokens) {
    if (!is_group_head(t)) continue;
    group_of[static_cast<std::size_t>(t.index)] = static_cast<int>(groups.size());
    VerbGroup g;
    g.head_token_index = t.index;
    g.is_root = t.head == 0 || t.deprel == "root";
    groups.push_back(g);
  }
  for (const auto& t : sentence.tokens) {
    if (is_group_head(t) || t.base_deprel() != "aux" || t.head == 0) continue;
    int g = group_of[static_cast<std::size_t>(t.head)];
    if (g >= 0) groups[static_cast<std::size_t>(g)].aux_token_indices.push_back(t.index);
  }
  for (auto& g : groups) {
    g.composite_tense = composite_tense(sentence, g.head_token_index, g.aux_token_indices);
    auto finite = [](const Token& t) {
      auto vf = t.feat("VerbForm");
      return vf == "Fin" || (vf.empty() && !t.feat("Tense").empty());
    };
    g.is_finite = finite(sentence.at(g.head_token_index));
    for (int a : g.aux_token_indices) g.is_finite = g.is_finite || finite(sentence.at(a));
  }
  return groups;
}

FeatureProfile compute_clause_ratios(const Document& doc) {
  using namespace feature;
  FeatureProfile p;
  int relative = 0, subordinate = 0, modifiers = 0, nouns = 0;
  int groups_total = 0, present = 0, past = 0, participle = 0;
  double density_sum = 0;
  int density_n = 0;

  for (const auto& s : doc.sentences) {
    int verbs = 0, alpha = 0;
    for (const auto& t : s.tokens) {
      const auto rel = t.base_deprel();
      if (t.deprel == "acl:relcl") ++relative;
      if (rel == "advcl" || rel == "ccomp" || rel == "xcomp" || rel == "acl") ++subordinate;
      if (rel == "amod" || rel == "nmod" || rel == "nummod") ++modifiers;
      if (t.upos == "NOUN" || t.upos == "PROPN") ++nouns;
      if (t.upos == "VERB") ++verbs;
      if (t.is_alphabetic) ++alpha;
    }
    if (alpha > 0) {
      density_sum += 100.0 * verbs / alpha;
      ++density_n;
    }
    for (const auto& g : unify_verb_groups(s)) {
      ++groups_total;
      present += g.composite_tense == Tense::Present ? 1 : 0;
      past += g.composite_tense == Tense::Past ? 1 : 0;
      participle += g.composite_tense == Tense::Participle ? 1 : 0;
    }
  }

  const double sentences = std::max(doc.sentence_count, 1);
  p.set(kRelativeRatio, relative / sentences);
  p.set(kSubordinateRatio, subordinate / sentences);
  p.set(kModifierPerNoun, static_cast<double>(modifiers) / std::max(nouns, 1));
  if (groups_total > 0) {
    p.set(kPresentRatio, static_cast<double>(present) / groups_total);
    p.set(kPastRatio, static_cast<double>(past) / groups_total);
    p.set(kParticipleRatio, static_cast<double>(participle) / groups_total);
  } else {
    for (const char* id : {kPresentRatio, kPastRatio, kParticipleRatio}) p.mark_missing(id);
  }
  if (density_n > 0)
    p.set(kVerbDensity, density_sum / density_n);
  else
    p.mark_missing(kVerbDensity);
  return p;
}

int sentence_depth(const Sentence& s) {
  int best = 0;
  for (const auto& t : s.tokens) {
    int d = 0;
    for (int cur = t.head; cur != 0; cur = s.at(cur).head) ++d;
    best = std::max(best, d);
  }
  return best;
}

double compute_graph_depth(const Document& doc) {
  if (doc.sentences.empty()) return 0.0;
  double sum = 0;
  for (const auto& s : doc.sentences) sum += sentence_depth(s);
  return sum / static_cast<double>(doc.sentences.size());
}

std::optional<double> compute_temporal_stability(const Document& doc, const Options& opts) {
  int group_a = 0, group_b = 0;
  for (const auto& s : doc.sentences) {
    for (const auto& g : unify_verb_groups(s)) {
      if (opts.stability == StabilityDenominator::RootGroups && !g.is_root) continue;
      switch (g.composite_tense) {
        case Tense::Present:
        case Tense::Future:
        case Tense::Progressive: ++group_a; break;
        case Tense::Past: ++group_b; break;
        default: break;
      }
    }
  }
  const int total = group_a + group_b;
  if (total == 0) return std::nullopt;
  return static_cast<double>(std::max(group_a, group_b)) / total;
}

std::optional<SentenceSchema> hypotactic_schema(const Sentence& s, const Options& opts) {
  const auto groups = unify_verb_groups(s);
  std::vector<int> group_of(s.size() + 1, -1);
  int root = -1;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    group_of[static_cast<std::size_t>(groups[i].head_token_index)] = static_cast<int>(i);
    if (groups[i].is_root) root = static_cast<int>(i);
  }
  if (root < 0) return std::nullopt;

  // Parent group: the nearest verb-group head above u, reached through a clausal relation.
  std::vector<std::vector<int>> kids(groups.size());
  for (std::size_t u = 0; u < groups.size(); ++u) {
    if (static_cast<int>(u) == root) continue;
    const Token* cur = &s.at(groups[u].head_token_index);
    bool clausal = false;
    while (true) {
      clausal = clausal || is_clausal(*cur, opts.clausal_deprels);
      if (cur->head == 0) break;
      int parent = group_of[static_cast<std::size_t>(cur->head)];
      if (parent >= 0) {
        if (clausal) kids[static_cast<std::size_t>(parent)].push_back(static_cast<int>(u));
        break;
      }
      cur = &s.at(cur->head);
    }
  }

  std::function<std::string(int, int&)> render = [&](int g, int& depth) -> std::string {
    std::string out = schema_name(groups[static_cast<std::size_t>(g)].composite_tense);
    if (g == root) out = "*" + out + "*";
    const auto& children = kids[static_cast<std::size_t>(g)];
    depth = 0;
    if (children.empty()) return out;
    out += '(';
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i) out += ',';
      int child_depth = 0;
      out += render(children[i], child_depth);
      depth = std::max(depth, child_depth + 1);
    }
    out += ')';
    return out;
  };

  SentenceSchema result;
  result.sent_index = s.sent_index;
  result.schema = render(root, result.depth);
  return result;
}

HypotacticResult compute_hypotactic_depth(const Document& doc, const Options& opts) {
  HypotacticResult r;
  double sum = 0;
  for (const auto& s : doc.sentences) {
    if (auto schema = hypotactic_schema(s, opts)) {
      sum += schema->depth;
      r.schemas.push_back(std::move(*schema));
    }
  }
  if (!r.schemas.empty()) r.depth = sum / static_cast<double>(r.schemas.size());
  return r;
}

int schema_depth(std::string_view schema) {
  int level = 0, best = 0;
  for (char c : schema) {
    if (c == '(') best = std::max(best, ++level);
    if (c == ')') --level;
  }
  return best;
}

std::string format_schemas(const std::string& doc_id, const std::vector<SentenceSchema>& schemas) {
  std::ostringstream out;
  for (const auto& s : schemas) out << doc_id << '\t' << s.sent_index << '\t' << s.schema << '\n';
  return out.str();
}

FeatureProfile compute_all(const Document& doc, const Options& opts) {
  using namespace feature;
  FeatureProfile p = compute_clause_ratios(doc);
  p.set(kAvgGraphDepth, compute_graph_depth(doc));
  if (auto ts = compute_temporal_stability(doc, opts))
    p.set(kTemporalStability, *ts);
  else
    p.mark_missing(kTemporalStability);
  auto hyp = compute_hypotactic_depth(doc, opts);
  if (hyp.depth)
    p.set(kHypotacticDepth, *hyp.depth);
  else
    p.mark_missing(kHypotacticDepth);
  return p;
}

}  // namespace stylo::syntactic
