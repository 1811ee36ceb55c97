#include "ordgrp/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ordgrp/error.hpp"

namespace ordgrp::pres {

Word free_reduce(std::string_view w) {
  Word out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && is_inverse_pair(out.back(), c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Word cyclic_reduce(std::string_view w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && is_inverse_pair(r[lo], r[hi - 1])) {
    ++lo;
    --hi;
  }
  return r.substr(lo, hi - lo);
}

Word inverse(std::string_view w) {
  Word out(w.rbegin(), w.rend());
  for (char& c : out) c = invert_letter(c);
  return out;
}

Word concat(std::string_view u, std::string_view v) {
  Word out(u);
  out.append(v);
  return free_reduce(out);
}

Word power(std::string_view w, int k) {
  const Word base = k >= 0 ? Word(w) : inverse(w);
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out += base;
  return free_reduce(out);
}

Word commutator(std::string_view u, std::string_view v) {
  return free_reduce(Word(u) + Word(v) + inverse(u) + inverse(v));
}

Word conjugate(std::string_view x, std::string_view w) { return free_reduce(inverse(w) + Word(x) + Word(w)); }

Word rotate(std::string_view w, std::size_t k) {
  if (w.empty()) return {};
  k %= w.size();
  return Word(w.substr(k)) + Word(w.substr(0, k));
}

std::size_t Presentation::generator_index(char letter) const {
  const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(letter)));
  auto it = std::find(generators.begin(), generators.end(), lower);
  if (it == generators.end()) throw Error(ErrorCode::ParseError, std::string("unknown generator '") + letter + "'");
  return static_cast<std::size_t>(it - generators.begin());
}

bool Presentation::has_letter(char letter) const {
  if (!std::isalpha(static_cast<unsigned char>(letter))) return false;
  const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(letter)));
  return std::find(generators.begin(), generators.end(), lower) != generators.end();
}

namespace {

void check_alphabet(std::string_view w, const Presentation& p) {
  for (char c : w)
    if (!p.has_letter(c)) throw Error(ErrorCode::ParseError, std::string("letter '") + c + "' is not a generator");
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Presentation make_presentation(std::vector<char> generators, const std::vector<Word>& relators) {
  Presentation p;
  for (char g : generators) {
    if (!std::islower(static_cast<unsigned char>(g)))
      throw Error(ErrorCode::ParseError, std::string("generator '") + g + "' must be a lowercase letter");
    if (std::find(p.generators.begin(), p.generators.end(), g) != p.generators.end())
      throw Error(ErrorCode::ParseError, std::string("generator '") + g + "' repeated");
    p.generators.push_back(g);
  }
  for (const auto& r : relators) {
    check_alphabet(r, p);
    Word reduced = free_reduce(r);
    if (!reduced.empty()) p.relators.push_back(std::move(reduced));
  }
  return p;
}

Presentation parse_presentation(std::string_view text) {
  std::vector<char> generators;
  std::vector<Word> relators;
  bool saw_generators = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'key: value'");
    const std::string key = trim(std::string_view(line).substr(0, colon));
    const std::string value = trim(std::string_view(line).substr(colon + 1));
    if (key == "generators") {
      std::istringstream names(value);
      std::string name;
      while (names >> name) {
        if (name.size() != 1)
          throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": generator names are single letters");
        generators.push_back(name[0]);
      }
      saw_generators = true;
    } else if (key == "relator") {
      relators.push_back(strip(value));
    } else if (key == "relation") {
      const auto eq = value.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": missing '='");
      std::string lhs = strip(std::string_view(value).substr(0, eq));
      std::string rhs = strip(std::string_view(value).substr(eq + 1));
      if (lhs == "1") lhs.clear();
      if (rhs == "1") rhs.clear();
      relators.push_back(lhs + inverse(rhs));
    } else {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!saw_generators) throw Error(ErrorCode::ParseError, "missing 'generators:' line");
  return make_presentation(std::move(generators), relators);
}

Presentation parse_presentation_any(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      return presentation_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  return parse_presentation(text);
}

json to_json(const Presentation& p) {
  json gens = json::array();
  for (char g : p.generators) gens.push_back(std::string(1, g));
  return json{{"generators", gens}, {"relators", p.relators}};
}

Presentation presentation_from_json(const json& j) {
  try {
    std::vector<char> generators;
    for (const auto& g : j.at("generators")) {
      const auto name = g.get<std::string>();
      if (name.size() != 1) throw Error(ErrorCode::ParseError, "generator names are single letters");
      generators.push_back(name[0]);
    }
    std::vector<Word> relators;
    for (const auto& r : j.at("relators")) relators.push_back(strip(r.get<std::string>()));
    return make_presentation(std::move(generators), relators);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("presentation JSON: ") + e.what());
  }
}

std::string format_presentation(const Presentation& p) {
  std::string out = "generators:";
  for (char g : p.generators) out += std::string(" ") + g;
  out += '\n';
  for (const auto& r : p.relators) out += "relator: " + r + "\n";
  return out;
}

Word parse_word(std::string_view text, const Presentation& p) {
  std::string w = strip(text);
  if (w == "1") return {};
  check_alphabet(w, p);
  return free_reduce(w);
}

std::vector<std::int64_t> exponent_vector(std::string_view w, const Presentation& p) {
  std::vector<std::int64_t> out(p.generators.size(), 0);
  for (char c : w) out[p.generator_index(c)] += std::islower(static_cast<unsigned char>(c)) ? 1 : -1;
  return out;
}

std::vector<char> alphabet(const Presentation& p) {
  std::vector<char> out;
  for (char g : p.generators) {
    out.push_back(g);
    out.push_back(invert_letter(g));
  }
  return out;
}

std::vector<Word> enumerate_words(const Presentation& p, std::size_t max_len) {
  const auto letters = alphabet(p);
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (char c : letters)
        if (w.empty() || !is_inverse_pair(w.back(), c)) next.push_back(w + c);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Presentation with_relators(const Presentation& p, const std::vector<Word>& extra) {
  std::vector<Word> relators = p.relators;
  relators.insert(relators.end(), extra.begin(), extra.end());
  return make_presentation(p.generators, relators);
}

}  // namespace ordgrp::pres
