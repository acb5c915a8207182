#include "stylo/conllu.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "stylo/error.hpp"

namespace stylo {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::map<std::string, std::string> parse_feats(std::string_view field, std::size_t line_no) {
  std::map<std::string, std::string> feats;
  if (field == "_") return feats;
  for (auto item : split(field, '|')) {
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw ParseError("malformed FEATS item '" + std::string(item) + "'", line_no);
    feats.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
  }
  return feats;
}

std::string join_feats(const std::map<std::string, std::string>& feats) {
  if (feats.empty()) return "_";
  std::string out;
  for (const auto& [k, v] : feats) {
    if (!out.empty()) out += '|';
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

void validate_tree(const Sentence& sentence) {
  const int n = static_cast<int>(sentence.tokens.size());
  const std::string where = "sentence " + std::to_string(sentence.sent_index);
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const auto& t = sentence.tokens[static_cast<std::size_t>(i)];
    if (t.index != i + 1)
      throw StructureError(where + ": token ids are not consecutive at " + std::to_string(t.index));
    if (t.head < 0 || t.head > n)
      throw StructureError(where + ": head " + std::to_string(t.head) + " of token " +
                           std::to_string(t.index) + " out of range");
    if (t.head == t.index)
      throw StructureError(where + ": token " + std::to_string(t.index) + " is its own head");
    if (t.head == 0) ++roots;
  }
  if (roots != 1)
    throw StructureError(where + ": expected exactly one root, found " + std::to_string(roots));
  // Every token must reach the root within n steps.
  for (int i = 1; i <= n; ++i) {
    int cur = i;
    int steps = 0;
    while (cur != 0) {
      cur = sentence.tokens[static_cast<std::size_t>(cur - 1)].head;
      if (++steps > n)
        throw StructureError(where + ": dependency cycle through token " + std::to_string(i));
    }
  }
}

Document parse_conllu(std::istream& in, const std::string& doc_id) {
  Document doc;
  doc.doc_id = doc_id;

  Sentence current;
  bool pending_newpar = false;
  bool any_line = false;
  int paragraph = 0;
  std::size_t line_no = 0;
  std::string raw;

  auto flush = [&]() {
    if (current.tokens.empty()) {
      if (!current.multiwords.empty()) throw ParseError("multiword range without tokens", line_no);
      return;  // comments stay attached to the next sentence
    }
    current.sent_index = static_cast<int>(doc.sentences.size());
    current.starts_paragraph = pending_newpar;
    if (pending_newpar && current.sent_index > 0) ++paragraph;
    current.paragraph_index = paragraph;
    pending_newpar = false;
    validate_tree(current);
    doc.sentences.push_back(std::move(current));
    current = Sentence{};
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) {
      flush();
      continue;
    }
    any_line = true;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body == "newpar" || body.rfind("newpar ", 0) == 0) {
        pending_newpar = true;
      } else if (body.rfind("newdoc", 0) == 0) {
        auto eq = body.find('=');
        if (doc.doc_id.empty() && eq != std::string_view::npos)
          doc.doc_id = std::string(trim(body.substr(eq + 1)));
        pending_newpar = true;
      } else {
        current.comments.emplace_back(body);
      }
      continue;
    }

    auto cols = split(line, '\t');
    if (cols.size() != 10)
      throw ParseError("expected 10 tab-separated columns, found " + std::to_string(cols.size()),
                       line_no);

    auto id = cols[0];
    if (id.find('.') != std::string_view::npos) continue;  // empty node
    if (auto dash = id.find('-'); dash != std::string_view::npos) {
      MultiwordToken mw;
      if (!parse_int(id.substr(0, dash), mw.first) || !parse_int(id.substr(dash + 1), mw.last))
        throw ParseError("malformed multiword range '" + std::string(id) + "'", line_no);
      mw.form = std::string(cols[1]);
      mw.misc = std::string(cols[9]);
      current.multiwords.push_back(std::move(mw));
      continue;
    }

    Token t;
    if (!parse_int(id, t.index)) throw ParseError("malformed token id '" + std::string(id) + "'", line_no);
    if (!parse_int(cols[6], t.head))
      throw ParseError("malformed head '" + std::string(cols[6]) + "'", line_no);
    t.form = std::string(cols[1]);
    t.lemma = std::string(cols[2]);
    t.upos = std::string(cols[3]);
    t.xpos = std::string(cols[4]);
    t.feats = parse_feats(cols[5], line_no);
    t.deprel = std::string(cols[7]);
    t.deps = std::string(cols[8]);
    t.misc = std::string(cols[9]);
    t.is_alphabetic = !t.is_punct() && is_alphabetic_form(t.form);
    current.tokens.push_back(std::move(t));
  }
  flush();

  if (!any_line || doc.sentences.empty()) throw ParseError("empty CoNLL-U input");
  refresh_counts(doc);
  return doc;
}

Document parse_conllu_string(const std::string& text, const std::string& doc_id) {
  std::istringstream in(text);
  return parse_conllu(in, doc_id);
}

Document read_conllu_file(const std::filesystem::path& path, const std::string& doc_id) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open CoNLL-U file " + path.string());
  return parse_conllu(in, doc_id);
}

std::string write_conllu(const Document& doc) {
  std::ostringstream out;
  for (const auto& s : doc.sentences) {
    if (s.starts_paragraph) out << "# newpar\n";
    for (const auto& c : s.comments) out << "# " << c << '\n';
    std::size_t mw = 0;
    for (const auto& t : s.tokens) {
      while (mw < s.multiwords.size() && s.multiwords[mw].first == t.index) {
        const auto& m = s.multiwords[mw++];
        out << m.first << '-' << m.last << '\t' << m.form << "\t_\t_\t_\t_\t_\t_\t_\t" << m.misc << '\n';
      }
      out << t.index << '\t' << t.form << '\t' << t.lemma << '\t' << t.upos << '\t' << t.xpos << '\t'
          << join_feats(t.feats) << '\t' << t.head << '\t' << t.deprel << '\t' << t.deps << '\t'
          << t.misc << '\n';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace stylo
