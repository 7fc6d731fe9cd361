#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "catkit/category.hpp"

namespace catkit {

// Line-oriented text format. A line ending in ':' opens a section; other
// non-blank lines belong to the open section. '#' starts a comment.
//
//   objects:            one or more names per line
//   morphisms:          f: a -> b
//   identities:         a = id_a      (missing identities are added as id_<a>)
//   composites:         g * f = h     (identity factors may be omitted)
//   elements:           poset elements, several per line
//   order:              a <= b        (reflexive-transitive closure is taken)
//   chain:              n             (the poset [n])
//   divisors:           n             (divisors of n under divisibility)
//
// A file uses either the category sections or one of the poset forms.

struct TextLine {
  int number = 0;
  int column = 1;  // column of the first non-blank character
  std::string text;
};

struct TextSection {
  std::string name;
  int line = 0;
  std::vector<TextLine> lines;
};

struct TextDocument {
  std::vector<TextSection> sections;
  const TextSection* find(std::string_view name) const;
};

[[noreturn]] void throw_parse_error(int line, int column, const std::string& message);

TextDocument parse_sections(std::string_view text);
std::string read_file(const std::string& path);
/// Splits on whitespace; column numbers are 1-based.
std::vector<std::pair<int, std::string>> split_words(const TextLine& line);

CatPtr category_from_document(const TextDocument& doc);
CatPtr parse_category(std::string_view text);
std::string format_category(const FiniteCategory& C);

/// Marking section lines: morphism names, or the keywords `all`, `identities`.
Marking marking_from_section(const CatPtr& C, const TextSection& section);
std::string format_marking(const std::string& name, const Marking& m);

/// Functor from a `map:` section of `x -> y` lines naming objects or
/// morphisms. Unlisted identities follow their objects; for thin targets
/// unlisted morphisms are inferred.
Functor functor_from_document(const TextDocument& doc, const CatPtr& source, const CatPtr& target);
std::string format_functor(const Functor& F);

}  // namespace catkit
