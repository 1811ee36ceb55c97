#pragma once

// Bounded word-problem machinery: relator moves, rewrite balls, and a
// triviality prover that returns a replayable chain of moves.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordgrp/presentation.hpp"
#include "ordgrp/smith.hpp"

namespace ordgrp::pres {

/// Let c be the rotation by `rotation` of the cyclically reduced relator
/// (inverted first if `inverse`), u = c[0, split) and v = (c[split, |c|))^-1,
/// so u = v in the group. The move replaces the occurrence of u at
/// `position` by v and freely reduces. split = 0 inserts a relator,
/// split = |c| deletes one.
struct Move {
  std::size_t relator = 0;
  bool inverse = false;
  std::size_t rotation = 0;
  std::size_t split = 0;
  std::size_t position = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

/// nullopt if an index is out of range.
std::optional<Word> relator_variant(const Presentation& p, std::size_t relator, bool inverse, std::size_t rotation);
/// nullopt if the move does not apply to w.
std::optional<Word> apply_move(const Presentation& p, const Word& w, const Move& m);

json to_json(const Move& m);
/// Throws MalformedCertificate.
Move move_from_json(const json& j);

/// One link of an equivalence chain. Forward: applying the move to the
/// previous word gives `word`. Backward: applying it to `word` gives the
/// previous word.
struct ChainStep {
  Move move;
  bool backward = false;
  Word word;
};
using Chain = std::vector<ChainStep>;

/// Replays every step from start; true iff all apply.
bool check_chain(const Presentation& p, const Word& start, const Chain& chain);
json chain_to_json(const Chain& c);
Chain chain_from_json(const json& j);

/// Every move that applies to w, in the order (position, relator variant,
/// split); variants that coincide as words are listed once.
class MoveTable {
 public:
  explicit MoveTable(const Presentation& p);

  template <class F>
  void for_each(const Word& w, F&& f) const;

  const Presentation& presentation() const { return p_; }

 private:
  struct Variant {
    Move base;  // split and position unset
    Word c;
  };
  Presentation p_;
  std::vector<Variant> variants_;
};

struct BallResult {
  std::vector<Word> words;  // discovery order, starting with w
  bool truncated = false;
};

/// Words reachable from w by at most max_steps moves without ever exceeding
/// max_len letters. truncated is set when a bound cut something off.
BallResult rewrite_ball(const Word& w, const Presentation& p, std::size_t max_len, std::size_t max_steps,
                        std::size_t max_nodes = 200'000);

struct ProverBounds {
  /// Ball around the empty word, built once and reused by every query.
  std::size_t ball_len = 0;
  std::size_t ball_steps = 0;
  /// Breadth-first probe from the queried word: it may grow by probe_slack
  /// letters beyond its own length (or ball_len, if larger).
  std::size_t probe_slack = 0;
  std::size_t probe_steps = 8;
  /// Node budget for each search.
  std::size_t max_nodes = 20'000;
};

json to_json(const ProverBounds& b);

/// Proves words trivial within the bounds. Words whose exponent sums are not
/// in the relation lattice are rejected without searching.
class TrivialityProver {
 public:
  TrivialityProver(const Presentation& p, ProverBounds bounds);

  /// A chain from w to the empty word.
  std::optional<Chain> prove_trivial(const Word& w) const;
  /// A chain from u v^-1 to the empty word.
  std::optional<Chain> prove_equal(const Word& u, const Word& v) const;

  const Presentation& presentation() const { return table_.presentation(); }
  const ProverBounds& bounds() const { return bounds_; }

 private:
  struct Parent {
    Word from;
    Move move;
  };
  void build_ball();

  MoveTable table_;
  ProverBounds bounds_;
  RelationLattice lattice_;
  std::unordered_map<Word, Parent> ball_;  // word -> how it was reached from the empty word
};

// ---------------------------------------------------------------------------

template <class F>
void MoveTable::for_each(const Word& w, F&& f) const {
  for (std::size_t pos = 0; pos <= w.size(); ++pos) {
    for (const auto& var : variants_) {
      std::size_t lcp = 0;
      while (pos + lcp < w.size() && lcp < var.c.size() && w[pos + lcp] == var.c[lcp]) ++lcp;
      for (std::size_t s = 0; s <= lcp; ++s) {
        Word out;
        out.reserve(w.size() + var.c.size());
        out.append(w, 0, pos);
        for (std::size_t k = var.c.size(); k-- > s;) out.push_back(invert_letter(var.c[k]));
        out.append(w, pos + s, Word::npos);
        Move m = var.base;
        m.split = s;
        m.position = pos;
        f(m, free_reduce(out));
      }
    }
  }
}

}  // namespace ordgrp::pres
