#include "ordgrp/quotient.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ordgrp/error.hpp"

namespace ordgrp::pres {

Perm perm_identity(int degree) {
  Perm p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_then(const Perm& p, const Perm& q) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[static_cast<std::size_t>(p[i])];
  return out;
}

Perm perm_inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

bool is_permutation(const Perm& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<bool> hit(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= degree || hit[static_cast<std::size_t>(x)]) return false;
    hit[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

namespace {

// For each letter of the alphabet, its image; index by (generator, inverse).
struct LetterImages {
  std::vector<Perm> forward, backward;

  LetterImages(const std::vector<Perm>& images) : forward(images) {
    for (const auto& p : images) backward.push_back(perm_inverse(p));
  }
};

Perm evaluate_with(const Word& w, const Presentation& p, const LetterImages& li, int degree) {
  Perm out = perm_identity(degree);
  for (char c : w) {
    const std::size_t g = p.generator_index(c);
    const Perm& step = std::islower(static_cast<unsigned char>(c)) ? li.forward[g] : li.backward[g];
    for (auto& x : out) x = step[static_cast<std::size_t>(x)];
  }
  return out;
}

bool separates(const Presentation& p, const LetterImages& li, int degree, const Word& u, const Word& v,
               SeparationMode mode) {
  const Perm pu = evaluate_with(u, p, li, degree);
  const Perm pv = evaluate_with(v, p, li, degree);
  if (mode == SeparationMode::Distinct) return pu != pv;
  return perm_then(pu, pv) != perm_then(pv, pu);
}

bool relators_hold(const Presentation& p, const LetterImages& li, int degree) {
  const Perm id = perm_identity(degree);
  for (const auto& r : p.relators)
    if (evaluate_with(r, p, li, degree) != id) return false;
  return true;
}

void partitions(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int k = 1; k <= std::min(n, max_part); ++k) {
    current.push_back(k);
    partitions(n - k, k, current, out);
    current.pop_back();
  }
}

// One permutation per cycle type, partitions (non-increasing parts) in
// lexicographic order.
std::vector<Perm> class_representatives(int degree) {
  std::vector<std::vector<int>> parts;
  std::vector<int> current;
  partitions(degree, degree, current, parts);
  std::sort(parts.begin(), parts.end());
  std::vector<Perm> out;
  for (const auto& part : parts) {
    Perm p = perm_identity(degree);
    int start = 0;
    for (int len : part) {
      for (int i = 0; i < len; ++i) p[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
      start += len;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Perm> all_permutations(int degree) {
  std::vector<Perm> out;
  Perm p = perm_identity(degree);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

Perm evaluate(const Word& w, const Presentation& p, const std::vector<Perm>& images) {
  const int degree = images.empty() ? 0 : static_cast<int>(images.front().size());
  return evaluate_with(w, p, LetterImages(images), degree);
}

bool satisfies_relators(const Presentation& p, const std::vector<Perm>& images) {
  const int degree = images.empty() ? 0 : static_cast<int>(images.front().size());
  return relators_hold(p, LetterImages(images), degree);
}

std::string_view to_string(SeparationMode m) { return m == SeparationMode::Distinct ? "distinct" : "noncommuting"; }

std::optional<QuotientWitness> finite_quotient_witness(const Presentation& p, const Word& u, const Word& v,
                                                       int degree_cap, SeparationMode mode) {
  const std::size_t k = p.generators.size();
  if (k == 0) return std::nullopt;
  for (int degree = 2; degree <= degree_cap; ++degree) {
    const auto firsts = class_representatives(degree);
    const auto all = all_permutations(degree);
    std::vector<std::size_t> idx(k, 0);  // idx[0] into firsts, others into all
    while (true) {
      std::vector<Perm> images;
      images.push_back(firsts[idx[0]]);
      for (std::size_t g = 1; g < k; ++g) images.push_back(all[idx[g]]);
      const LetterImages li(images);
      if (relators_hold(p, li, degree) && separates(p, li, degree, u, v, mode))
        return QuotientWitness{degree, images, u, v, mode};
      // Odometer with the last generator fastest.
      std::size_t g = k;
      while (g-- > 0) {
        const std::size_t limit = g == 0 ? firsts.size() : all.size();
        if (++idx[g] < limit) break;
        idx[g] = 0;
      }
      if (g == static_cast<std::size_t>(-1)) break;
    }
  }
  return std::nullopt;
}

bool check_witness(const Presentation& p, const QuotientWitness& w) {
  if (w.degree < 1 || w.images.size() != p.generators.size()) return false;
  for (const auto& img : w.images)
    if (!is_permutation(img, w.degree)) return false;
  for (char c : w.u + w.v)
    if (!p.has_letter(c)) return false;
  const LetterImages li(w.images);
  return relators_hold(p, li, w.degree) && separates(p, li, w.degree, w.u, w.v, w.mode);
}

json to_json(const QuotientWitness& w, const Presentation& p) {
  json images = json::object();
  for (std::size_t g = 0; g < w.images.size() && g < p.generators.size(); ++g) {
    json arr = json::array();
    for (int x : w.images[g]) arr.push_back(x + 1);
    images[std::string(1, p.generators[g])] = arr;
  }
  return json{{"degree", w.degree}, {"images", images}, {"targets", json::array({w.u, w.v})}, {"mode", to_string(w.mode)}};
}

QuotientWitness witness_from_json(const json& j, const Presentation& p) {
  try {
    QuotientWitness w;
    w.degree = j.at("degree").get<int>();
    for (char g : p.generators) {
      Perm img;
      for (const auto& x : j.at("images").at(std::string(1, g))) img.push_back(x.get<int>() - 1);
      w.images.push_back(std::move(img));
    }
    const auto& targets = j.at("targets");
    if (!targets.is_array() || targets.size() != 2) throw Error(ErrorCode::MalformedCertificate, "targets must be a pair");
    w.u = targets[0].get<std::string>();
    w.v = targets[1].get<std::string>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "distinct") {
      w.mode = SeparationMode::Distinct;
    } else if (mode == "noncommuting") {
      w.mode = SeparationMode::NonCommuting;
    } else {
      throw Error(ErrorCode::MalformedCertificate, "unknown mode '" + mode + "'");
    }
    return w;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedCertificate, std::string("quotient witness: ") + e.what());
  }
}

}  // namespace ordgrp::pres
