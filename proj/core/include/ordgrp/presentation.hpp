#pragma once

// Finite presentations over single-letter generators. A word is a string of
// letters: lowercase for a generator, uppercase for its inverse.

#include <string>
#include <string_view>
#include <vector>

#include "ordgrp/order_core.hpp"

namespace ordgrp::pres {

using Word = std::string;

inline bool is_inverse_pair(char x, char y) { return x != y && (x ^ 0x20) == y; }
inline char invert_letter(char x) { return static_cast<char>(x ^ 0x20); }

Word free_reduce(std::string_view w);
/// Also cancels the first letter against the last.
Word cyclic_reduce(std::string_view w);
Word inverse(std::string_view w);
Word concat(std::string_view u, std::string_view v);  // freely reduced
Word power(std::string_view w, int k);
Word commutator(std::string_view u, std::string_view v);  // u v u^-1 v^-1
Word conjugate(std::string_view x, std::string_view w);   // w^-1 x w
Word rotate(std::string_view w, std::size_t k);

struct Presentation {
  std::vector<char> generators;  // lowercase letters
  std::vector<Word> relators;    // freely reduced, nonempty

  std::size_t generator_index(char letter) const;  // of the letter or its inverse
  bool has_letter(char letter) const;
};

/// Checks the alphabet and reduces relators; empty relators are dropped.
/// Throws ParseError on an unknown letter or a repeated generator.
Presentation make_presentation(std::vector<char> generators, const std::vector<Word>& relators);

/// Line format: '#' starts a comment; "generators: a b"; "relator: w" or
/// "relation: u = v" (stored as u v^-1). Whitespace inside words is ignored.
Presentation parse_presentation(std::string_view text);
/// Either the line format or {"generators": [...], "relators": [...]}.
Presentation parse_presentation_any(std::string_view text);
json to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);
std::string format_presentation(const Presentation& p);

/// Strips whitespace, treats "1" as the empty word, checks the alphabet and
/// reduces. Throws ParseError.
Word parse_word(std::string_view text, const Presentation& p);

/// Exponent sum of each generator in w.
std::vector<std::int64_t> exponent_vector(std::string_view w, const Presentation& p);

/// Letter order g1, G1, g2, G2, ...
std::vector<char> alphabet(const Presentation& p);
/// Every freely reduced word with 1 <= length <= max_len in shortlex order
/// over alphabet(p).
std::vector<Word> enumerate_words(const Presentation& p, std::size_t max_len);

/// Adds "u = v" relators to a copy of p.
Presentation with_relators(const Presentation& p, const std::vector<Word>& extra);

}  // namespace ordgrp::pres
