#include "ordgrp/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ordgrp/error.hpp"

namespace ordgrp::pres {

std::optional<Word> relator_variant(const Presentation& p, std::size_t relator, bool inverse_flag,
                                    std::size_t rotation) {
  if (relator >= p.relators.size()) return std::nullopt;
  Word base = cyclic_reduce(p.relators[relator]);
  if (inverse_flag) base = inverse(base);
  if (rotation >= base.size()) return std::nullopt;
  return rotate(base, rotation);
}

std::optional<Word> apply_move(const Presentation& p, const Word& w, const Move& m) {
  const auto c = relator_variant(p, m.relator, m.inverse, m.rotation);
  if (!c || m.split > c->size() || m.position > w.size() || m.position + m.split > w.size()) return std::nullopt;
  if (w.compare(m.position, m.split, *c, 0, m.split) != 0) return std::nullopt;
  Word out = w.substr(0, m.position);
  out += inverse(std::string_view(*c).substr(m.split));
  out += w.substr(m.position + m.split);
  return free_reduce(out);
}

json to_json(const Move& m) {
  return json{{"relator", m.relator},
              {"inverse", m.inverse},
              {"rotation", m.rotation},
              {"split", m.split},
              {"position", m.position}};
}

Move move_from_json(const json& j) {
  try {
    return Move{j.at("relator").get<std::size_t>(), j.at("inverse").get<bool>(), j.at("rotation").get<std::size_t>(),
                j.at("split").get<std::size_t>(), j.at("position").get<std::size_t>()};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedCertificate, std::string("move: ") + e.what());
  }
}

bool check_chain(const Presentation& p, const Word& start, const Chain& chain) {
  Word current = start;
  for (const auto& step : chain) {
    if (step.backward) {
      const auto back = apply_move(p, step.word, step.move);
      if (!back || *back != current) return false;
    } else {
      const auto next = apply_move(p, current, step.move);
      if (!next || *next != step.word) return false;
    }
    current = step.word;
  }
  return true;
}

json chain_to_json(const Chain& c) {
  json out = json::array();
  for (const auto& s : c) out.push_back({{"move", to_json(s.move)}, {"backward", s.backward}, {"word", s.word}});
  return out;
}

Chain chain_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::MalformedCertificate, "chain must be an array");
  Chain out;
  try {
    for (const auto& s : j)
      out.push_back({move_from_json(s.at("move")), s.at("backward").get<bool>(), s.at("word").get<std::string>()});
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedCertificate, std::string("chain: ") + e.what());
  }
  return out;
}

MoveTable::MoveTable(const Presentation& p) : p_(p) {
  std::set<Word> seen;
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (bool inv : {false, true}) {
      const std::size_t len = cyclic_reduce(p.relators[r]).size();
      for (std::size_t rot = 0; rot < len; ++rot) {
        Word c = *relator_variant(p, r, inv, rot);
        if (!seen.insert(c).second) continue;
        variants_.push_back({Move{r, inv, rot, 0, 0}, std::move(c)});
      }
    }
  }
}

BallResult rewrite_ball(const Word& w, const Presentation& p, std::size_t max_len, std::size_t max_steps,
                        std::size_t max_nodes) {
  const MoveTable table(p);
  BallResult out;
  std::set<Word> seen{w};
  out.words.push_back(w);
  std::vector<Word> frontier{w};
  for (std::size_t depth = 0; depth < max_steps && !frontier.empty(); ++depth) {
    std::vector<Word> next;
    for (const auto& x : frontier) {
      table.for_each(x, [&](const Move&, Word y) {
        if (y.size() > max_len) {
          out.truncated = true;
          return;
        }
        if (seen.count(y)) return;
        if (out.words.size() >= max_nodes) {
          out.truncated = true;
          return;
        }
        seen.insert(y);
        out.words.push_back(y);
        next.push_back(std::move(y));
      });
    }
    frontier = std::move(next);
  }
  if (!frontier.empty()) {
    // Anything new one step further out was cut by max_steps.
    for (const auto& x : frontier) {
      bool grows = false;
      table.for_each(x, [&](const Move&, const Word& y) {
        if (!grows && y.size() <= max_len && !seen.count(y)) grows = true;
      });
      if (grows) {
        out.truncated = true;
        break;
      }
    }
  }
  return out;
}

json to_json(const ProverBounds& b) {
  return json{{"ball_len", b.ball_len},       {"ball_steps", b.ball_steps},   {"probe_slack", b.probe_slack},
              {"probe_steps", b.probe_steps}, {"max_nodes", b.max_nodes}};
}

TrivialityProver::TrivialityProver(const Presentation& p, ProverBounds bounds)
    : table_(p), bounds_(bounds), lattice_(p) {
  build_ball();
}

void TrivialityProver::build_ball() {
  if (bounds_.ball_steps == 0) return;
  std::vector<Word> frontier{Word{}};
  ball_.emplace(Word{}, Parent{});
  for (std::size_t depth = 0; depth < bounds_.ball_steps && !frontier.empty(); ++depth) {
    std::vector<Word> next;
    for (const auto& x : frontier) {
      table_.for_each(x, [&](const Move& m, Word y) {
        if (y.size() > bounds_.ball_len || ball_.size() >= bounds_.max_nodes || ball_.count(y)) return;
        ball_.emplace(y, Parent{x, m});
        next.push_back(std::move(y));
      });
    }
    frontier = std::move(next);
  }
}

std::optional<Chain> TrivialityProver::prove_trivial(const Word& w) const {
  if (w.empty()) return Chain{};
  if (!lattice_.contains(exponent_vector(w, presentation()))) return std::nullopt;

  std::unordered_map<Word, Parent> seen;
  seen.emplace(w, Parent{});
  const std::size_t limit = std::max(w.size() + bounds_.probe_slack, bounds_.ball_len);

  const auto finish = [&](const Word& meet) {
    Chain forward;
    for (Word x = meet; x != w;) {
      const Parent& par = seen.at(x);
      forward.push_back({par.move, false, x});
      x = par.from;
    }
    std::reverse(forward.begin(), forward.end());
    for (Word x = meet; !x.empty();) {
      const Parent& par = ball_.at(x);
      forward.push_back({par.move, true, par.from});
      x = par.from;
    }
    return forward;
  };

  if (ball_.count(w)) return finish(w);
  std::vector<Word> frontier{w};
  for (std::size_t depth = 0; depth < bounds_.probe_steps && !frontier.empty(); ++depth) {
    std::vector<Word> next;
    std::optional<Word> meet;
    for (const auto& x : frontier) {
      table_.for_each(x, [&](const Move& m, Word y) {
        if (meet || y.size() > limit || seen.size() >= bounds_.max_nodes || seen.count(y)) return;
        seen.emplace(y, Parent{x, m});
        if (y.empty() || ball_.count(y)) {
          meet = y;
          return;
        }
        next.push_back(std::move(y));
      });
      if (meet) return finish(*meet);
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::optional<Chain> TrivialityProver::prove_equal(const Word& u, const Word& v) const {
  return prove_trivial(concat(u, inverse(v)));
}

}  // namespace ordgrp::pres
