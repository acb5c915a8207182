#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "stylo/document.hpp"

namespace stylo {

/// Parses a CoNLL-U stream into a Document.
///
/// Multiword range lines and empty nodes ("5.1") are not part of the token
/// sequence; range lines are retained on the sentence for round-tripping.
/// A "# newpar" comment starts a new paragraph; without any, the document
/// is a single paragraph. Every sentence is validated to be a single tree.
///
/// Throws ParseError (bad columns, empty input) or StructureError (cycles,
/// multiple roots, out-of-range heads).
Document parse_conllu(std::istream& in, const std::string& doc_id);
Document parse_conllu_string(const std::string& text, const std::string& doc_id);
Document read_conllu_file(const std::filesystem::path& path, const std::string& doc_id);

/// Serializes back to CoNLL-U; parse_conllu(write_conllu(d)) == d.
std::string write_conllu(const Document& doc);

/// Throws StructureError unless the sentence is a single-rooted tree.
void validate_tree(const Sentence& sentence);

}  // namespace stylo
