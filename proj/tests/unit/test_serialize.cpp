#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace nexakt;
using namespace nexakt::testing;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "<no InputError>";
}

}  // namespace

TEST(Serialize, PresentationRoundTrip) {
  for (const auto& alg : {make_lambda3(2).alg, make_pi2(5).alg, gen_preprojective_A(3, 7)}) {
    Json j = to_json(alg->presentation());
    EXPECT_EQ(presentation_from_json(j), alg->presentation());
    EXPECT_EQ(presentation_from_json(parse_json(canonical_dump(j), "mem")), alg->presentation());
  }
}

TEST(Serialize, PresentationErrorsCarryPointers) {
  Json j = to_json(make_lambda3().alg->presentation());
  Json bad = j;
  bad["quiver"]["arrows"][0]["to"] = "9";
  EXPECT_NE(error_of([&] { presentation_from_json(bad); }).find("/quiver/arrows/0/to"), std::string::npos);
  bad = j;
  bad["field"]["p"] = 9;
  EXPECT_NE(error_of([&] { presentation_from_json(bad); }).find("/field/p"), std::string::npos);
  bad = j;
  bad.erase("quiver");
  EXPECT_THROW(presentation_from_json(bad), InputError);
}

TEST(Serialize, ModuleMorphismComplexRoundTrip) {
  auto L = make_lambda3();
  Module x = direct_sum(L.P1, L.S2);
  EXPECT_EQ(module_from_json(L.alg, to_json(x)), x);
  Morphism f = hom_basis(L.S0, L.P1).front();
  Morphism back = morphism_from_json(L.alg, to_json(f));
  EXPECT_EQ(back, f);

  ComplexSeq c = n_cokernel(f, L.m3, 2);
  ComplexSeq c2 = complex_from_json(L.alg, to_json(c));
  EXPECT_EQ(c2.lo(), c.lo());
  ASSERT_EQ(c2.size(), c.size());
  for (int k = c.lo(); k < c.hi(); ++k) EXPECT_EQ(c2.diff(k), c.diff(k));
}

TEST(Serialize, MorphismReferencesResolveByName) {
  auto L = make_lambda3();
  ModuleResolver resolve = [&](const std::string& name) -> std::optional<Module> {
    if (name == "S0") return L.S0;
    if (name == "P1") return L.P1;
    return std::nullopt;
  };
  Json j = parse_json(R"({"source":"S0","target":"P1","components":{"0":[[1]]}})", "mem");
  EXPECT_EQ(morphism_from_json(L.alg, j, resolve), hom_basis(L.S0, L.P1).front());
  Json unknown = parse_json(R"({"source":"Q","target":"P1","components":{}})", "mem");
  EXPECT_THROW(morphism_from_json(L.alg, unknown, resolve), InputError);
}

TEST(Serialize, ModuleErrors) {
  auto L = make_lambda3();
  Json j = to_json(L.P1);
  j["arrows"]["a1"] = Json::array({Json::array({1, 0})});
  EXPECT_NE(error_of([&] { module_from_json(L.alg, j); }).find("/arrows/a1"), std::string::npos);
  // Relation violated: a2 then a1 must vanish.
  Json bad = parse_json(R"({"dims":{"0":1,"1":1,"2":1},"arrows":{"a1":[[1]],"a2":[[1]]}})", "mem");
  EXPECT_THROW(module_from_json(L.alg, bad), Error);
  // Missing matrices are fine when one side is zero.
  Json s2 = parse_json(R"({"dims":{"2":1},"arrows":{}})", "mem");
  EXPECT_EQ(module_from_json(L.alg, s2), L.S2);
}

TEST(Serialize, ParseErrorsReportByteOffset) {
  std::string msg = error_of([] { parse_json("{\"a\": [1, 2,", "input.json"); });
  EXPECT_NE(msg.find("input.json"), std::string::npos) << msg;
  EXPECT_NE(msg.find("byte"), std::string::npos) << msg;
  EXPECT_THROW(load_json_file("/nonexistent/file.json"), InputError);
}

TEST(Serialize, HashesAreStable) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  auto L = make_lambda3();
  auto L2 = make_lambda3();
  EXPECT_EQ(content_hash(L.P1), content_hash(L2.P1));
  EXPECT_NE(content_hash(L.P1), content_hash(L.P2));
  EXPECT_EQ(canonical_dump(parse_json(R"({"b":1,"a":[2,{"d":0,"c":1}]})", "mem")),
            R"({"a":[2,{"c":1,"d":0}],"b":1})");
}

TEST(Serialize, CertificateFragments) {
  auto L = make_lambda3();
  ComplexSeq x = n_cokernel(hom_basis(L.S0, L.P1).front(), L.m3, 2);
  Json c = to_json(verify_n_exact(x, L.m3, 2));
  EXPECT_TRUE(c["verdict"].get<bool>());
  EXPECT_EQ(c["interior_checks"].get<std::size_t>(), 16u);
  EXPECT_EQ(c["records"].size(), 24u);

  Json r = to_json(check_n_cluster_tilting(L.m3, 2, L.indecs, true, L.labels), 2);
  EXPECT_EQ(r["verdict"], "2-CT");

  auto P = make_pi2();
  FrobeniusCtx ctx = check_frobenius_setup(P.m, 2, P.indecs);
  Angle a = induced_angle(ctx, ctx.coresolution(P.S1));
  Json ja = to_json(a);
  EXPECT_EQ(ja["objects"].size(), 4u);
  EXPECT_EQ(ja["sigma_first"]["hash"], content_hash(a.sigma_first()));
  EXPECT_TRUE(to_json(verify_angle_exact(ctx, a))["pass"].get<bool>());
}
