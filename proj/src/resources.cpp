#include "stylo/resources.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "stylo/document.hpp"
#include "stylo/error.hpp"

namespace stylo {
namespace {

std::ifstream open_resource(const std::filesystem::path& dir, const std::string& name) {
  auto path = dir / name;
  std::ifstream in(path);
  if (!in) throw IoError("missing resource file: " + path.string());
  return in;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Blank lines and lines starting with '#' are skipped in every resource file.
bool skip_line(const std::string& line) { return line.empty() || line.front() == '#'; }

std::unordered_set<std::string> load_word_list(const std::filesystem::path& dir, const std::string& name) {
  auto in = open_resource(dir, name);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (skip_line(line)) continue;
    words.insert(lowercase(line));
  }
  return words;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, '\t')) out.push_back(strip(field));
  return out;
}

ConnectiveCategory parse_category(const std::string& s, std::size_t line_no) {
  auto v = lowercase(s);
  if (v == "additive") return ConnectiveCategory::Additive;
  if (v == "causal") return ConnectiveCategory::Causal;
  if (v == "temporal") return ConnectiveCategory::Temporal;
  if (v == "logical") return ConnectiveCategory::Logical;
  throw ValidationError("connectives.tsv line " + std::to_string(line_no) + ": unknown category '" + s + "'");
}

Polarity parse_polarity(const std::string& s, std::size_t line_no) {
  auto v = lowercase(s);
  if (v == "pos") return Polarity::Positive;
  if (v == "neg") return Polarity::Negative;
  throw ValidationError("connectives.tsv line " + std::to_string(line_no) + ": unknown polarity '" + s + "'");
}

}  // namespace

std::string to_string(ConnectiveCategory c) {
  switch (c) {
    case ConnectiveCategory::Additive: return "additive";
    case ConnectiveCategory::Causal: return "causal";
    case ConnectiveCategory::Temporal: return "temporal";
    case ConnectiveCategory::Logical: return "logical";
  }
  return "?";
}

std::string to_string(Polarity p) { return p == Polarity::Positive ? "pos" : "neg"; }

std::map<std::string, std::size_t> LexicalResources::summary() const {
  return {{"gsl_1000.txt", gsl1000.size()},       {"gsl_2000.txt", gsl2000.size()},
          {"awl.txt", awl.size()},                {"concreteness.tsv", concreteness.size()},
          {"connectives.tsv", connectives.size()}, {"emphatics.txt", emphatics.size()},
          {"deictics.txt", deictics.size()}};
}

LexicalResources load_resources(const std::filesystem::path& dir) {
  for (const auto& name : resource_file_names())
    if (!std::filesystem::exists(dir / name)) throw IoError("missing resource file: " + (dir / name).string());

  LexicalResources res;
  res.gsl1000 = load_word_list(dir, "gsl_1000.txt");
  res.gsl2000 = load_word_list(dir, "gsl_2000.txt");
  res.awl = load_word_list(dir, "awl.txt");
  res.emphatics = load_word_list(dir, "emphatics.txt");
  res.deictics = load_word_list(dir, "deictics.txt");

  {
    auto in = open_resource(dir, "concreteness.tsv");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      line = strip(line);
      if (skip_line(line)) continue;
      auto cols = split_tabs(line);
      if (cols.size() != 2)
        throw ParseError("concreteness.tsv: expected word TAB value", line_no);
      double value = 0;
      auto [ptr, ec] = std::from_chars(cols[1].data(), cols[1].data() + cols[1].size(), value);
      if (ec != std::errc() || ptr != cols[1].data() + cols[1].size())
        throw ParseError("concreteness.tsv: malformed value '" + cols[1] + "'", line_no);
      if (value < kConcretenessMin || value > kConcretenessMax)
        throw ValidationError("concreteness.tsv line " + std::to_string(line_no) + ": value " + cols[1] +
                              " outside [100, 700]");
      res.concreteness.insert_or_assign(lowercase(cols[0]), value);
    }
  }

  {
    auto in = open_resource(dir, "connectives.tsv");
    std::string line;
    std::size_t line_no = 0;
    std::set<std::tuple<std::vector<std::string>, int, int>> seen;
    while (std::getline(in, line)) {
      ++line_no;
      line = strip(line);
      if (skip_line(line)) continue;
      auto cols = split_tabs(line);
      if (cols.size() != 3)
        throw ParseError("connectives.tsv: expected phrase TAB category TAB polarity", line_no);
      Connective c;
      std::istringstream words(lowercase(cols[0]));
      for (std::string w; words >> w;) c.phrase.push_back(w);
      if (c.phrase.empty()) throw ValidationError("connectives.tsv line " + std::to_string(line_no) + ": empty phrase");
      c.category = parse_category(cols[1], line_no);
      c.polarity = parse_polarity(cols[2], line_no);
      if (seen.emplace(c.phrase, static_cast<int>(c.category), static_cast<int>(c.polarity)).second)
        res.connectives.push_back(std::move(c));
    }
  }
  return res;
}

}  // namespace stylo
