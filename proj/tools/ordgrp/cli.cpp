#include "cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <span>
#include <sstream>

#include "ordgrp/braid.hpp"
#include "ordgrp/error.hpp"
#include "ordgrp/free_magnus.hpp"
#include "ordgrp/lattice_ext.hpp"
#include "ordgrp/pl_line.hpp"
#include "ordgrp/prover.hpp"

namespace ordgrp::cli {

namespace {

using Action = std::function<json()>;

struct Registry {
  std::vector<std::pair<CLI::App*, Action>> leaves;

  void add(CLI::App* app, Action a) { leaves.emplace_back(app, std::move(a)); }
};

std::string slurp(const std::string& source, std::istream& in) {
  std::stringstream buf;
  if (source == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(source);
  if (!file) throw Error(ErrorCode::ParseError, "cannot read '" + source + "'");
  buf << file.rdbuf();
  return buf.str();
}

// "@path" reads a file, "-" reads standard input, anything else is literal.
std::string inline_or_file(const std::string& arg, std::istream& in) {
  if (arg == "-") return slurp(arg, in);
  if (!arg.empty() && arg.front() == '@') return slurp(arg.substr(1), in);
  return arg;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::int64_t parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + s + "'");
  }
}

lattice::IntVector parse_vector(std::string_view text) {
  lattice::IntVector v;
  for (const auto& t : split_list(text)) v.push_back(parse_int(t));
  return v;
}

lattice::KleinElement parse_klein(std::string_view text) {
  const auto v = parse_vector(text);
  if (v.size() != 2) throw Error(ErrorCode::ParseError, "Klein element is 'm,n'");
  return {v[0], v[1]};
}

lattice::GermElement parse_germ(std::string_view text) {
  const auto parts = split_list(text);
  if (parts.size() != 2) throw Error(ErrorCode::ParseError, "germ is 's,r'");
  return lattice::make_germ(parse_rational(parts[0]), parse_rational(parts[1]));
}

json ordering_result(Ordering o) { return json{{"result", to_string(o)}}; }

// --- braid ------------------------------------------------------------------

void add_braid(CLI::App& app, Registry& reg, std::istream&) {
  auto* braid = app.add_subcommand("braid", "Braid groups: handle reduction and the Dehornoy order");
  braid->require_subcommand(1);

  struct Opts {
    int strands = 0;
    std::uint64_t cap = braid::kDefaultStepCap;
    std::string u, v, conjugator;
    int power = 1;
  };
  auto o = std::make_shared<Opts>();
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--strands,-n", o->strands, "Number of strands")->required();
    sub->add_option("--step-cap", o->cap, "Handle reduction step limit");
  };

  auto* reduce = braid->add_subcommand("reduce", "Handle-reduce a word and classify it");
  common(reduce);
  reduce->add_option("word", o->u, "Signed generator indices, e.g. \"1 2 -1\"")->required();
  reg.add(reduce, [o] {
    const auto r = braid::handle_reduce(braid::parse_braid(o->u, o->strands), o->cap);
    return json{{"word", braid::format_braid(r.word)},
                {"letters", r.word.letters},
                {"classification", braid::to_string(r.classification)},
                {"index", r.index},
                {"steps", r.steps}};
  });

  auto* compare = braid->add_subcommand("compare", "Dehornoy comparison of two braids");
  common(compare);
  compare->add_option("u", o->u)->required();
  compare->add_option("v", o->v)->required();
  compare->add_option("--conjugator", o->conjugator, "Compare in the conjugate order <_g");
  reg.add(compare, [o, compare] {
    const auto u = braid::parse_braid(o->u, o->strands);
    const auto v = braid::parse_braid(o->v, o->strands);
    if (compare->count("--conjugator"))
      return ordering_result(braid::conjugate_compare(braid::parse_braid(o->conjugator, o->strands), u, v, o->cap));
    return ordering_result(braid::dehornoy_compare(u, v, o->cap));
  });

  auto* equal = braid->add_subcommand("equal", "Decide equality of two braids");
  common(equal);
  equal->add_option("u", o->u)->required();
  equal->add_option("v", o->v)->required();
  reg.add(equal, [o] {
    return json{{"equal", braid::braids_equal(braid::parse_braid(o->u, o->strands),
                                              braid::parse_braid(o->v, o->strands), o->cap)}};
  });

  auto* delta = braid->add_subcommand("delta", "The half twist, optionally to a power");
  common(delta);
  delta->add_option("--power", o->power, "Exponent");
  reg.add(delta, [o] {
    const auto d = braid::power(braid::delta(o->strands), o->power);
    return json{{"word", braid::format_braid(d)}, {"letters", d.letters}};
  });

  auto* perm = braid->add_subcommand("permutation", "Induced permutation, purity and closure components");
  common(perm);
  perm->add_option("word", o->u)->required();
  reg.add(perm, [o] {
    const auto b = braid::parse_braid(o->u, o->strands);
    const auto p = braid::permutation(b);
    return json{{"images", p.images},
                {"cycles", p.cycle_notation()},
                {"pure", braid::is_pure(b)},
                {"components", braid::closure_components(b)}};
  });

  auto* mn = braid->add_subcommand("mn-test", "Prime knot test by comparison with the fourth power of the half twist");
  common(mn);
  mn->add_option("word", o->u)->required();
  reg.add(mn, [o] {
    return json{{"result", braid::to_string(braid::mn_prime_test(braid::parse_braid(o->u, o->strands), o->cap))}};
  });
}

// --- free -------------------------------------------------------------------

void add_free(CLI::App& app, Registry& reg, std::istream&) {
  auto* free = app.add_subcommand("free", "Free groups and the Magnus order");
  free->require_subcommand(1);

  struct Opts {
    int rank = 0;
    int cap = 4;
    magnus::MagnusOptions magnus;
    std::string u, v;
  };
  auto o = std::make_shared<Opts>();
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--rank,-r", o->rank, "Rank of the free group")->required();
    sub->add_option("--cap-ceiling", o->magnus.cap_ceiling, "Largest truncation degree tried");
  };

  auto* expand = free->add_subcommand("expand", "Truncated Magnus expansion");
  common(expand);
  expand->add_option("word", o->u, "Signed generator indices")->required();
  expand->add_option("--cap", o->cap, "Truncation degree");
  reg.add(expand, [o] { return magnus::magnus_expand(magnus::parse_free_word(o->u, o->rank), o->cap).to_json(); });

  auto* compare = free->add_subcommand("compare", "Magnus comparison");
  common(compare);
  compare->add_option("u", o->u)->required();
  compare->add_option("v", o->v)->required();
  reg.add(compare, [o] {
    return ordering_result(magnus::magnus_compare(magnus::parse_free_word(o->u, o->rank),
                                                  magnus::parse_free_word(o->v, o->rank), o->magnus));
  });

  auto* sign = free->add_subcommand("sign", "Sign in the Magnus order");
  common(sign);
  sign->add_option("word", o->u)->required();
  reg.add(sign, [o] {
    return json{{"sign", to_string(magnus::magnus_sign(magnus::parse_free_word(o->u, o->rank), o->magnus))}};
  });

  auto* lcs = free->add_subcommand("lcs-degree", "Lower central series degree");
  common(lcs);
  lcs->add_option("word", o->u)->required();
  reg.add(lcs, [o] { return json{{"degree", magnus::lcs_degree(magnus::parse_free_word(o->u, o->rank), o->magnus)}}; });
}

// --- zn, klein, germ ----------------------------------------------------------

void add_lattice(CLI::App& app, Registry& reg, std::istream& in) {
  struct Opts {
    std::string u, v, order;
    std::vector<std::string> constraints;
    std::size_t dimension = 0;
  };
  auto o = std::make_shared<Opts>();

  auto* zn = app.add_subcommand("zn", "Weight orders on Z^n");
  zn->require_subcommand(1);
  const auto order_of = [o, &in](std::size_t n) {
    if (o->order.empty()) return lattice::lex_order(n);
    return lattice::weight_order_from_json(json::parse(inline_or_file(o->order, in)));
  };

  auto* compare = zn->add_subcommand("compare", "Compare two integer vectors");
  compare->add_option("u", o->u, "Vector such as \"1,-2\"")->required();
  compare->add_option("v", o->v)->required();
  compare->add_option("--order", o->order, "Weight order JSON (inline or @file); lexicographic by default");
  reg.add(compare, [o, order_of] {
    const auto u = parse_vector(o->u);
    return ordering_result(lattice::zn_compare(u, parse_vector(o->v), order_of(u.size())));
  });

  auto* perturb = zn->add_subcommand("perturb", "A different order keeping the constraints positive");
  perturb->add_option("--dimension,-d", o->dimension, "n")->required();
  perturb->add_option("--constraint,-c", o->constraints, "Vector that must stay positive (repeatable)");
  perturb->add_option("--order", o->order, "Weight order JSON (inline or @file); lexicographic by default");
  reg.add(perturb, [o, order_of] {
    std::vector<lattice::IntVector> cs;
    for (const auto& c : o->constraints) cs.push_back(parse_vector(c));
    const auto r = lattice::sikora_perturb(order_of(o->dimension), cs);
    return json{{"order", lattice::to_json(r.order)}, {"witness", r.witness}};
  });

  auto* klein = app.add_subcommand("klein", "The Klein bottle group x^m y^n");
  klein->require_subcommand(1);
  auto* kc = klein->add_subcommand("compare", "Compare x^m y^n elements given as \"m,n\"");
  kc->add_option("u", o->u)->required();
  kc->add_option("v", o->v)->required();
  reg.add(kc, [o] { return ordering_result(lattice::klein_compare(parse_klein(o->u), parse_klein(o->v))); });
  auto* km = klein->add_subcommand("multiply", "Product of two elements");
  km->add_option("u", o->u)->required();
  km->add_option("v", o->v)->required();
  reg.add(km, [o] { return json{{"product", lattice::to_json(lattice::klein_mul(parse_klein(o->u), parse_klein(o->v)))}}; });

  auto* germ = app.add_subcommand("germ", "Affine germs [[1, s], [0, r]]");
  germ->require_subcommand(1);
  auto* gc = germ->add_subcommand("compare", "Compare germs given as \"s,r\"");
  gc->add_option("u", o->u)->required();
  gc->add_option("v", o->v)->required();
  reg.add(gc, [o] { return ordering_result(lattice::germ_compare(parse_germ(o->u), parse_germ(o->v))); });
  auto* gm = germ->add_subcommand("multiply", "Matrix product");
  gm->add_option("u", o->u)->required();
  gm->add_option("v", o->v)->required();
  reg.add(gm, [o] { return json{{"product", lattice::to_json(lattice::germ_mul(parse_germ(o->u), parse_germ(o->v)))}}; });
}

// --- pl -----------------------------------------------------------------------

void add_pl(CLI::App& app, Registry& reg, std::istream& in) {
  auto* pl = app.add_subcommand("pl", "Piecewise-linear homeomorphisms of [0,1]");
  pl->require_subcommand(1);
  struct Opts {
    std::string f, g, x;
    std::uint64_t probe_cap = pl::kDefaultProbeCap;
  };
  auto o = std::make_shared<Opts>();
  const auto map = [&in](const std::string& arg) { return pl::parse_pl(inline_or_file(arg, in)); };
  const auto two = [&](CLI::App* sub) {
    sub->add_option("f", o->f, "Breakpoints \"x,y x,y ...\", JSON, @file or -")->required();
    sub->add_option("g", o->g)->required();
  };

  auto* compose = pl->add_subcommand("compose", "x -> f(g(x))");
  two(compose);
  reg.add(compose, [o, map] { return pl::to_json(pl::pl_compose(map(o->f), map(o->g))); });

  auto* invert = pl->add_subcommand("invert", "Inverse map");
  invert->add_option("f", o->f)->required();
  reg.add(invert, [o, map] { return pl::to_json(pl::pl_invert(map(o->f))); });

  auto* compare = pl->add_subcommand("compare", "Bi-order by first departure from the diagonal");
  two(compare);
  reg.add(compare, [o, map] { return ordering_result(pl::chehata_compare(map(o->f), map(o->g))); });

  auto* tp = pl->add_subcommand("testpoint-compare", "Left order by values on the Calkin-Wilf sequence");
  two(tp);
  tp->add_option("--probe-cap", o->probe_cap, "Enumerated points to try");
  reg.add(tp, [o, map] { return ordering_result(pl::testpoint_compare(map(o->f), map(o->g), o->probe_cap)); });

  auto* eval = pl->add_subcommand("eval", "f(x)");
  eval->add_option("f", o->f)->required();
  eval->add_option("x", o->x)->required();
  reg.add(eval, [o, map] { return json{{"value", rational_to_json(pl::pl_eval(map(o->f), parse_rational(o->x)))}}; });

  auto* sign = pl->add_subcommand("sign", "Sign in the departure order");
  sign->add_option("f", o->f)->required();
  reg.add(sign, [o, map] { return json{{"sign", to_string(pl::chehata_sign(map(o->f)))}}; });
}

// --- pres ---------------------------------------------------------------------

void add_pres(CLI::App& app, Registry& reg, std::istream& in) {
  auto* presc = app.add_subcommand("pres", "Finitely presented groups");
  presc->require_subcommand(1);
  struct Opts {
    std::string file, u, v, facts, cert;
    int degree_cap = 0;
    bool noncommuting = false;
    std::size_t max_len = 12, max_steps = 4, max_factors = 0;
    std::vector<std::string> rules;
  };
  auto o = std::make_shared<Opts>();
  const auto load = [o, &in] { return pres::parse_presentation_any(slurp(o->file, in)); };
  const auto file_opt = [&](CLI::App* sub) {
    sub->add_option("presentation", o->file, "Presentation file, or - for standard input")->required();
  };

  auto* ab = presc->add_subcommand("abelianize", "Abelianization via Smith normal form");
  file_opt(ab);
  reg.add(ab, [load] { return pres::to_json(pres::abelianization(load())); });

  auto* ind = presc->add_subcommand("indicability", "Rank-zero abelianization obstruction");
  file_opt(ind);
  ind->add_option("--degree-cap", o->degree_cap, "Search a nontriviality witness up to this degree");
  reg.add(ind, [o, load] {
    const auto p = load();
    std::optional<pres::QuotientWitness> w;
    if (o->degree_cap >= 2 && pres::abelianization(p).torsion.empty()) w = pres::nontriviality_witness(p, o->degree_cap);
    const auto r = pres::indicability_obstruction(p, w);
    json out{{"result", pres::to_string(r.verdict)}, {"abelianization", pres::to_json(r.abelianization)}};
    out["certificate"] = r.certificate ? pres::to_json(*r.certificate) : json(nullptr);
    return out;
  });

  auto* refute = presc->add_subcommand("refute-biorder", "Search for a certificate that no bi-order exists");
  file_opt(refute);
  refute->add_option("--rule", o->rules, "Rules to try, in order (default Indicability ConjugationInversion "
                                         "PowerCommutes UniqueRoots)");
  reg.add(refute, [o, load] {
    const auto p = load();
    pres::RefuteBounds b;
    if (!o->rules.empty()) {
      b.order.clear();
      for (const auto& r : o->rules) b.order.push_back(pres::refute_rule_from_string(r));
    }
    const auto r = pres::biorder_refute(p, b);
    if (!r.certificate) return json{{"result", "Unknown"}, {"bounds", pres::to_json(b)}};
    return json{{"result", "Refuted"}, {"rule", pres::to_string(*r.rule)}, {"certificate", pres::to_json(*r.certificate)}};
  });

  auto* lo = presc->add_subcommand("check-lo", "Case analysis for left orders over the default schema");
  file_opt(lo);
  lo->add_option("--max-factors", o->max_factors, "Products of up to this many positive atoms");
  reg.add(lo, [o, load] {
    const auto p = load();
    pres::CaseBounds b;
    if (o->max_factors) b.cone.max_factors = o->max_factors;
    json out = pres::to_json(pres::nonlo_case_analysis(p, pres::default_schema(p), b), p);
    out["bounds"] = json{{"cone", pres::to_json(b.cone)}, {"degree_cap", b.degree_cap}};
    return out;
  });

  auto* cone = presc->add_subcommand("cone-search", "Positive-cone contradiction search for one case");
  file_opt(cone);
  cone->add_option("--facts", o->facts, "Comparisons such as \"a>1, b<1\"")->required();
  cone->add_option("--max-factors", o->max_factors, "Products of up to this many positive atoms");
  reg.add(cone, [o, load] {
    const auto p = load();
    pres::ConeBounds b;
    if (o->max_factors) b.max_factors = o->max_factors;
    const auto r = pres::cone_consistency_search(p, pres::parse_seed(o->facts, p), b);
    json out{{"products_checked", r.products_checked}, {"bounds", pres::to_json(b)}};
    if (r.contradiction) {
      out["result"] = "Contradiction";
      out["certificate"] = pres::to_json(*r.contradiction);
    } else {
      out["result"] = "NoContradictionWithinBounds";
    }
    return out;
  });

  auto* qw = presc->add_subcommand("quotient-witness", "Permutation representation separating two words");
  file_opt(qw);
  qw->add_option("u", o->u, "Word, uppercase for inverses; 1 is the identity")->required();
  qw->add_option("v", o->v)->required();
  qw->add_option("--degree-cap", o->degree_cap, "Largest degree searched")->default_val(5);
  qw->add_flag("--noncommuting", o->noncommuting, "Require non-commuting images instead of distinct ones");
  reg.add(qw, [o, load] {
    const auto p = load();
    const auto mode = o->noncommuting ? pres::SeparationMode::NonCommuting : pres::SeparationMode::Distinct;
    const auto w = pres::finite_quotient_witness(p, pres::parse_word(o->u, p), pres::parse_word(o->v, p),
                                                 o->degree_cap, mode);
    if (!w) return json{{"result", "NotFound"}, {"degree_cap", o->degree_cap}};
    return json{{"result", "Found"},
                {"certificate", pres::to_json(pres::Certificate{pres::CertificateKind::QuotientWitness, to_json(*w, p)})}};
  });

  auto* verify = presc->add_subcommand("verify", "Replay a certificate against a presentation");
  file_opt(verify);
  verify->add_option("certificate", o->cert, "Certificate JSON file, or - for standard input")->required();
  reg.add(verify, [o, load, &in] {
    const auto p = load();
    json j;
    try {
      j = json::parse(slurp(o->cert, in));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    // Accept the bare certificate or any command output that wraps one.
    if (!j.contains("format_version") && j.contains("certificate")) j = j.at("certificate");
    return json{{"valid", pres::verify_certificate(pres::certificate_from_json(j), p)}};
  });

  auto* ball = presc->add_subcommand("ball", "Words reachable by relator moves within bounds");
  file_opt(ball);
  ball->add_option("word", o->u)->required();
  ball->add_option("--max-len", o->max_len, "Longest word visited");
  ball->add_option("--max-steps", o->max_steps, "Moves from the start word");
  reg.add(ball, [o, load] {
    const auto p = load();
    const auto r = pres::rewrite_ball(pres::parse_word(o->u, p), p, o->max_len, o->max_steps);
    return json{{"words", r.words}, {"truncated", r.truncated}};
  });
}

// --- harness ------------------------------------------------------------------

template <OrderOracle O>
json run_suite(const O& oracle, std::span<const typename O::Element> samples, bool bi) {
  json out{{"samples", samples.size()}, {"laws", verify_order_laws(oracle, samples).to_json()}};
  out["invariance"] = (bi ? verify_bi_invariance(oracle, samples) : verify_left_invariance(oracle, samples)).to_json();
  out["invariance_kind"] = bi ? "bi" : "left";
  return out;
}

void add_harness(CLI::App& app, Registry& reg) {
  auto* harness = app.add_subcommand("harness", "Order-property suites on seeded samples");
  harness->require_subcommand(1);
  struct Opts {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t count = 100;
    std::size_t max_len = 8;
  };
  auto o = std::make_shared<Opts>();
  auto* runc = harness->add_subcommand("run", "Run one suite");
  runc->add_option("suite", o->suite, "dehornoy, magnus, zn, klein, germ, chehata or testpoint")
      ->required()
      ->check(CLI::IsMember({"dehornoy", "magnus", "zn", "klein", "germ", "chehata", "testpoint"}));
  runc->add_option("--seed", o->seed, "Sampling seed")->required();
  runc->add_option("--count", o->count, "Number of samples");
  runc->add_option("--max-len", o->max_len, "Longest sampled word (braid and free suites)");
  reg.add(runc, [o] {
    json out;
    const auto& s = o->suite;
    if (s == "dehornoy") {
      const auto sample = braid::sample_braids(4, o->count, o->max_len, o->seed);
      out = run_suite(braid::DehornoyOracle(4), std::span(sample.elements), false);
    } else if (s == "magnus") {
      const auto sample = magnus::sample_free_words(2, o->count, o->max_len, o->seed);
      const magnus::MagnusOracle oracle(2);
      out = run_suite(oracle, std::span(sample.elements), true);
      const auto c = conradian_check(oracle, std::span(sample.elements));
      out["conradian"] = json{{"checked", c.checked}, {"pass", c.pass()}};
    } else if (s == "zn") {
      Rng rng(o->seed);
      std::vector<lattice::IntVector> sample;
      for (std::size_t i = 0; i < o->count; ++i)
        sample.push_back({uniform_int(rng, -5, 5), uniform_int(rng, -5, 5), uniform_int(rng, -5, 5)});
      out = run_suite(lattice::ZnOracle(lattice::lex_order(3)), std::span<const lattice::IntVector>(sample), true);
    } else if (s == "klein") {
      Rng rng(o->seed);
      std::vector<lattice::KleinElement> sample;
      for (std::size_t i = 0; i < o->count; ++i) sample.push_back({uniform_int(rng, -4, 4), uniform_int(rng, -4, 4)});
      out = run_suite(lattice::KleinOracle{}, std::span<const lattice::KleinElement>(sample), false);
    } else if (s == "germ") {
      const auto sample = lattice::sample_germs(o->count, o->seed);
      out = run_suite(lattice::GermOracle{}, std::span(sample.elements), true);
    } else if (s == "chehata") {
      const auto sample = pl::sample_pl_maps(o->count, 3, o->seed);
      out = run_suite(pl::ChehataOracle{}, std::span(sample.elements), true);
    } else {
      const auto sample = pl::sample_pl_maps(o->count, 3, o->seed);
      out = run_suite(pl::TestPointOracle{}, std::span(sample.elements), false);
    }
    out["suite"] = s;
    out["seed"] = o->seed;
    return out;
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orders on groups: braids, free groups, PL maps and presented groups", "ordgrp"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  Registry reg;
  add_braid(app, reg, in);
  add_free(app, reg, in);
  add_lattice(app, reg, in);
  add_pl(app, reg, in);
  add_pres(app, reg, in);
  add_harness(app, reg);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  for (const auto& [leaf, action] : reg.leaves) {
    if (!leaf->parsed()) continue;
    try {
      const json result = action();
      out << (pretty ? result.dump(2) : result.dump()) << "\n";
      return 0;
    } catch (const Error& e) {
      err << e.what() << "\n";
      return is_resource_bound(e.code()) ? 3 : 2;
    } catch (const json::exception& e) {
      err << "ParseError: " << e.what() << "\n";
      return 2;
    }
  }
  err << "usage error: no command given\n";
  return 2;
}

}  // namespace ordgrp::cli
