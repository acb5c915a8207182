#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace stylo {

enum class ConnectiveCategory { Additive, Causal, Temporal, Logical };
enum class Polarity { Positive, Negative };

struct Connective {
  std::vector<std::string> phrase;  // lowercase tokens
  ConnectiveCategory category = ConnectiveCategory::Additive;
  Polarity polarity = Polarity::Positive;

  friend bool operator==(const Connective&, const Connective&) = default;
};

/// Word lists and tables used by the lexical features. All words lowercase.
struct LexicalResources {
  std::unordered_set<std::string> gsl1000;
  std::unordered_set<std::string> gsl2000;
  std::unordered_set<std::string> awl;
  std::unordered_map<std::string, double> concreteness;  // values in [100, 700]
  std::vector<Connective> connectives;
  std::unordered_set<std::string> emphatics;
  std::unordered_set<std::string> deictics;

  /// Entry counts per resource file name.
  std::map<std::string, std::size_t> summary() const;
};

inline constexpr double kConcretenessMin = 100.0;
inline constexpr double kConcretenessMax = 700.0;

/// File names expected inside a resource directory.
inline const std::vector<std::string>& resource_file_names() {
  static const std::vector<std::string> names{"gsl_1000.txt",     "gsl_2000.txt",  "awl.txt",
                                              "concreteness.tsv", "connectives.tsv", "emphatics.txt",
                                              "deictics.txt"};
  return names;
}

/// Loads every resource file from `dir`. Throws IoError naming a missing file,
/// ParseError / ValidationError (with line number) on malformed rows.
LexicalResources load_resources(const std::filesystem::path& dir);

std::string to_string(ConnectiveCategory c);
std::string to_string(Polarity p);

}  // namespace stylo
