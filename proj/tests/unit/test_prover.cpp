#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ordgrp/error.hpp"
#include "ordgrp/prover.hpp"

namespace ordgrp::pres {
namespace {

using ordgrp::testing::bundled;

/// Rejected means verify returns false or throws MalformedCertificate.
bool rejected(const Certificate& c, const Presentation& p) {
  try {
    return !verify_certificate(c, p);
  } catch (const Error& e) {
    return e.code() == ErrorCode::MalformedCertificate;
  }
}

/// Paths of every scalar in the payload.
void leaves(const json& j, const json::json_pointer& at, std::vector<json::json_pointer>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) leaves(v, at / k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) leaves(j[i], at / i, out);
  } else {
    out.push_back(at);
  }
}

/// One single-field mutation per scalar: strings gain a letter, numbers move by one, booleans flip.
/// Split points are skipped: sliding a split across a letter that matches the relator
/// yields the same freely reduced word, so such a mutant is still a correct proof.
/// Quotient targets are skipped too: they are the claim itself, and an extended
/// target is often still separated by the same permutations.
std::vector<Certificate> mutations(const Certificate& c, char letter) {
  std::vector<json::json_pointer> paths;
  leaves(c.payload, json::json_pointer(), paths);
  std::vector<Certificate> out;
  for (const auto& path : paths) {
    if (path.back() == "split" || path.to_string().find("/targets/") != std::string::npos) continue;
    Certificate m = c;
    json& v = m.payload[path];
    if (v.is_string()) v = v.get<std::string>() + letter;
    else if (v.is_boolean()) v = !v.get<bool>();
    else if (v.is_number_unsigned()) v = v.get<std::uint64_t>() + 1;
    else if (v.is_number_integer()) v = v.get<std::int64_t>() + 1;
    else continue;
    out.push_back(std::move(m));
  }
  return out;
}

// --- Indicability -----------------------------------------------------------------

TEST(Indicability, Examples) {
  const auto sigma = bundled("brieskorn237");
  const auto r1 = indicability_obstruction(sigma);
  EXPECT_EQ(r1.verdict, IndicabilityVerdict::NotIndicable);
  ASSERT_TRUE(r1.certificate);
  EXPECT_EQ(r1.certificate->payload.at("conclusion"), "not-indicable");
  EXPECT_TRUE(verify_certificate(*r1.certificate, sigma));

  const auto witness = nontriviality_witness(sigma, 7);
  ASSERT_TRUE(witness);
  EXPECT_EQ(witness->degree, 7);
  const auto r2 = indicability_obstruction(sigma, witness);
  EXPECT_EQ(r2.certificate->payload.at("conclusion"), "not-bi-orderable");
  EXPECT_TRUE(verify_certificate(*r2.certificate, sigma));

  const auto weeks = bundled("weeks");
  const auto r3 = indicability_obstruction(weeks);
  EXPECT_EQ(r3.verdict, IndicabilityVerdict::NotIndicable);
  EXPECT_EQ(r3.certificate->payload.at("conclusion"), "not-bi-orderable");
  EXPECT_TRUE(r3.certificate->payload.at("nontrivial").contains("torsion"));
  EXPECT_TRUE(verify_certificate(*r3.certificate, weeks));

  EXPECT_EQ(indicability_obstruction(bundled("trefoil")).verdict, IndicabilityVerdict::Indicable);
}

TEST(Indicability, WrongConclusionsAreRejected) {
  const auto sigma = bundled("brieskorn237");
  auto c = *indicability_obstruction(sigma).certificate;
  c.payload["conclusion"] = "not-bi-orderable";  // no nontriviality evidence attached
  EXPECT_TRUE(rejected(c, sigma));
  // A certificate for one group does not transfer to another.
  EXPECT_TRUE(rejected(*indicability_obstruction(bundled("weeks")).certificate, sigma));
}

// --- Cone search --------------------------------------------------------------------

TEST(Cone, Examples) {
  const auto c3 = make_presentation({'a'}, {"aaa"});
  const auto r1 = cone_consistency_search(c3, parse_seed("a>1", c3));
  ASSERT_TRUE(r1.found());
  EXPECT_TRUE(verify_certificate(*r1.contradiction, c3));

  const auto klein = bundled("klein");
  EXPECT_FALSE(cone_consistency_search(klein, parse_seed("x>1, y>1", klein)).found());

  const auto weeks = bundled("weeks");
  const auto r3 = cone_consistency_search(weeks, parse_seed("a>1, b<1", weeks));
  ASSERT_TRUE(r3.found());
  EXPECT_TRUE(verify_certificate(*r3.contradiction, weeks));
}

TEST(Cone, InconsistentSeedIsRejected) {
  const auto weeks = bundled("weeks");
  try {
    cone_consistency_search(weeks, parse_seed("a>1, a<1", weeks));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentSeed);
  }
}

TEST(Cone, MonotoneInBounds) {
  const auto weeks = bundled("weeks");
  const auto seed = parse_seed("a>1, b<1", weeks);
  ConeBounds b;
  const auto base = cone_consistency_search(weeks, seed, b);
  ASSERT_TRUE(base.found());
  for (int extra = 1; extra <= 2; ++extra) {
    ConeBounds bigger = b;
    bigger.max_factors += extra;
    bigger.rewrite.probe_steps += extra;
    bigger.rewrite.max_nodes *= 2;
    const auto r = cone_consistency_search(weeks, seed, bigger);
    ASSERT_TRUE(r.found()) << extra;
    EXPECT_TRUE(verify_certificate(*r.contradiction, weeks));
    EXPECT_LE(r.products_checked, base.products_checked);
    // The trace found at the smaller bounds still replays.
    EXPECT_TRUE(verify_certificate(*base.contradiction, weeks));
  }
}

TEST(Cone, TraceFailsWithoutItsRelators) {
  const auto weeks = bundled("weeks");
  const auto r = cone_consistency_search(weeks, parse_seed("a>1, b<1", weeks));
  ASSERT_TRUE(r.found());
  for (std::size_t drop = 0; drop < weeks.relators.size(); ++drop) {
    std::vector<Word> kept;
    for (std::size_t i = 0; i < weeks.relators.size(); ++i)
      if (i != drop) kept.push_back(weeks.relators[i]);
    const auto missing = make_presentation(weeks.generators, kept);
    EXPECT_TRUE(rejected(*r.contradiction, missing)) << drop;
  }
}

// --- Case analysis --------------------------------------------------------------------

TEST(Cases, DefaultSchemas) {
  EXPECT_EQ(default_schema(make_presentation({'a'}, {"aa"})).cases.size(), 3u);
  const auto s = default_schema(bundled("weeks"));
  ASSERT_EQ(s.cases.size(), 6u);
  EXPECT_EQ(format_seed(s.cases[0]), "a=1");
  EXPECT_EQ(format_seed(s.cases[2]), "a>1, 1<b, b<a");
}

TEST(Cases, WeeksIsRefutedCaseByCase) {
  const auto weeks = bundled("weeks");
  const auto a = nonlo_case_analysis(weeks, default_schema(weeks));
  EXPECT_TRUE(a.all_refuted());
  EXPECT_EQ(a.verdict(), "NotLeftOrderableRelativeToSchema");
  for (const auto& c : a.cases) {
    ASSERT_TRUE(c.certificate) << format_seed(c.seed);
    EXPECT_TRUE(verify_certificate(*c.certificate, weeks)) << format_seed(c.seed);
  }
}

TEST(Cases, KleinIsUnknown) {
  const auto klein = bundled("klein");
  const auto a = nonlo_case_analysis(klein, default_schema(klein));
  EXPECT_FALSE(a.all_refuted());
  EXPECT_EQ(a.verdict(), "Unknown");
  for (const auto& c : a.cases)
    if (c.certificate) EXPECT_TRUE(verify_certificate(*c.certificate, klein));
}

TEST(Cases, TorsionGroupIsRefuted) {
  const auto p = bundled("cyclic2");
  const auto a = nonlo_case_analysis(p, default_schema(p));
  EXPECT_TRUE(a.all_refuted());
  const json j = to_json(a, p);
  EXPECT_EQ(j.at("result"), "NotLeftOrderableRelativeToSchema");
  EXPECT_EQ(j.at("cases").size(), 3u);
}

// --- Bi-order refutation -------------------------------------------------------------

TEST(Refute, Examples) {
  const auto b3 = bundled("braid3");
  const auto r1 = biorder_refute(b3);
  ASSERT_TRUE(r1.certificate);
  EXPECT_EQ(r1.rule, RefuteRule::UniqueRoots);
  EXPECT_EQ(r1.certificate->payload.at("u"), "ab");
  EXPECT_EQ(r1.certificate->payload.at("v"), "ba");
  EXPECT_EQ(r1.certificate->payload.at("k"), 3);
  EXPECT_TRUE(verify_certificate(*r1.certificate, b3));

  const auto klein = bundled("klein");
  const auto r2 = biorder_refute(klein);
  ASSERT_TRUE(r2.certificate);
  EXPECT_EQ(r2.rule, RefuteRule::ConjugationInversion);
  EXPECT_EQ(r2.certificate->payload.at("x"), "x");
  EXPECT_EQ(r2.certificate->payload.at("w"), "y");
  EXPECT_TRUE(verify_certificate(*r2.certificate, klein));

  const auto trefoil = bundled("trefoil");
  const auto r3 = biorder_refute(trefoil);
  ASSERT_TRUE(r3.certificate);
  EXPECT_EQ(r3.rule, RefuteRule::PowerCommutes);
  EXPECT_EQ(r3.certificate->payload.at("g"), "a");
  EXPECT_EQ(r3.certificate->payload.at("h"), "b");
  EXPECT_EQ(r3.certificate->payload.at("n"), 3);
  EXPECT_TRUE(verify_certificate(*r3.certificate, trefoil));
}

TEST(Refute, ClosedManifoldGroupsViaIndicability) {
  for (const char* name : {"weeks", "brieskorn237"}) {
    const auto p = bundled(name);
    const auto r = biorder_refute(p);
    ASSERT_TRUE(r.certificate) << name;
    EXPECT_EQ(r.rule, RefuteRule::Indicability);
    EXPECT_EQ(r.certificate->payload.at("conclusion"), "not-bi-orderable");
    EXPECT_TRUE(verify_certificate(*r.certificate, p));
  }
}

TEST(Refute, RuleOrderIsRespected) {
  RefuteBounds b;
  b.order = {RefuteRule::UniqueRoots};
  EXPECT_EQ(biorder_refute(bundled("braid3"), b).rule, RefuteRule::UniqueRoots);
  b.order = {RefuteRule::Indicability};
  EXPECT_FALSE(biorder_refute(bundled("trefoil"), b).certificate.has_value());
  EXPECT_EQ(refute_rule_from_string("PowerCommutes"), RefuteRule::PowerCommutes);
  EXPECT_THROW(refute_rule_from_string("Nope"), Error);
}

TEST(Refute, AbelianGroupIsNotRefuted) {
  const auto z2 = make_presentation({'a', 'b'}, {"abAB"});
  EXPECT_FALSE(biorder_refute(z2).certificate.has_value());
}

// --- Certificates ---------------------------------------------------------------------

TEST(Certificates, JsonRoundTrip) {
  const auto klein = bundled("klein");
  const auto c = *biorder_refute(klein).certificate;
  const json j = to_json(c);
  EXPECT_EQ(j.at("format_version"), 1);
  EXPECT_EQ(j.at("kind"), "ConjugationInversion");
  const auto back = certificate_from_json(json::parse(j.dump()));
  EXPECT_EQ(back.kind, c.kind);
  EXPECT_TRUE(verify_certificate(back, klein));

  json bad = j;
  bad["format_version"] = 2;
  EXPECT_THROW(certificate_from_json(bad), Error);
  bad = j;
  bad["kind"] = "Magic";
  EXPECT_THROW(certificate_from_json(bad), Error);
  EXPECT_THROW(verify_certificate(Certificate{CertificateKind::UniqueRoots, json::object()}, klein), Error);
}

TEST(Certificates, AlteredPermutationImageIsRejected) {
  const auto trefoil = bundled("trefoil");
  const auto w = *finite_quotient_witness(trefoil, "ab", "ba", 3);
  Certificate c{CertificateKind::QuotientWitness, to_json(w, trefoil)};
  ASSERT_TRUE(verify_certificate(c, trefoil));
  c.payload["images"]["a"] = json::array({1, 2, 3});  // a trivial image makes ab = ba
  EXPECT_TRUE(rejected(c, trefoil));
}

TEST(Certificates, SingleFieldMutationsAreRejected) {
  struct Case {
    std::string name;
    Certificate cert;
  };
  std::vector<Case> cases;
  for (const char* name : {"braid3", "klein", "trefoil", "weeks", "brieskorn237"})
    cases.push_back({name, *biorder_refute(bundled(name)).certificate});
  const auto weeks = bundled("weeks");
  for (const auto& c : nonlo_case_analysis(weeks, default_schema(weeks)).cases) cases.push_back({"weeks", *c.certificate});

  std::size_t tried = 0;
  for (const auto& [name, cert] : cases) {
    const auto p = bundled(name);
    ASSERT_TRUE(verify_certificate(cert, p));
    for (char letter : {p.generators[0], invert_letter(p.generators[0])})
      for (const auto& m : mutations(cert, letter)) {
        ++tried;
        EXPECT_TRUE(rejected(m, p)) << name << " " << to_string(cert.kind) << "\n" << m.payload.dump();
      }
  }
  EXPECT_GT(tried, 100u);
}

}  // namespace
}  // namespace ordgrp::pres
