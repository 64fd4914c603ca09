#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "support.hpp"
#include "twistkit/atlas.hpp"
#include "twistkit/error.hpp"

using namespace twistkit;
using namespace tk_test;
using atlas::JobSpec;

namespace {

std::string random_text(Rng& rng) {
  static const std::string alphabet = "abc xyz-019 \"\\/.'";
  std::string s;
  int n = rng.below(12);
  for (int i = 0; i < n; ++i) s += alphabet[rng.below(static_cast<int>(alphabet.size()))];
  return s;
}

JobSpec job(const std::string& cmd, std::vector<std::string> groups, std::vector<std::string> omegas = {}) {
  JobSpec j;
  j.command = cmd;
  j.groups = std::move(groups);
  j.omegas = std::move(omegas);
  return j;
}

nlohmann::json parse(const atlas::Outcome& o) { return nlohmann::json::parse(o.json); }

}  // namespace

TEST(JobSpec, RoundTripProperty) {
  Rng rng(404);
  const std::vector<std::string> cmds = {"classify", "verify", "examples", "morita", "modular"};
  for (int t = 0; t < 500; ++t) {
    JobSpec j;
    j.command = rng.pick(cmds);
    for (int i = rng.below(4); i > 0; --i) j.groups.push_back(random_text(rng));
    for (int i = rng.below(3); i > 0; --i) j.omegas.push_back(random_text(rng));
    if (rng.coin()) j.bound = rng.below(5000);
    if (rng.coin()) j.out = random_text(rng);
    if (rng.coin()) j.seed = static_cast<std::uint64_t>(rng.below64(INT64_MAX));
    if (j.out.empty()) j.out.clear();
    auto text = atlas::format_job(j);
    auto back = atlas::parse_job(text);
    EXPECT_EQ(back, j) << text;
    EXPECT_EQ(atlas::format_job(back), text);
  }
}

TEST(JobSpec, ParseErrors) {
  EXPECT_THROW(atlas::parse_job(""), ParseError);
  EXPECT_THROW(atlas::parse_job("plot --group D8"), ParseError);
  EXPECT_THROW(atlas::parse_job("classify --colour red"), ParseError);
  EXPECT_THROW(atlas::parse_job("classify --group"), ParseError);
  EXPECT_THROW(atlas::parse_job("classify --seed -4"), ParseError);
  EXPECT_THROW(atlas::parse_job("classify --bound 1x"), ParseError);
  auto j = atlas::parse_job("verify --group \"dihedral 4\" --omega \"inflate cyclic 2 1 via mod-r2-s\" --bound 8");
  EXPECT_EQ(j.groups, (std::vector<std::string>{"dihedral 4"}));
  EXPECT_EQ(j.bound, 8);
}

TEST(OmegaSpec, Variants) {
  auto D8 = dihedral_group(4);
  EXPECT_TRUE(atlas::parse_omega(D8, "trivial").is_zero());
  EXPECT_TRUE(atlas::parse_omega(D8, "").is_zero());
  EXPECT_EQ(atlas::parse_omega(D8, "inflate cyclic 2 1 via mod-r2-s"), inflated_d8_omega(D8));
  EXPECT_TRUE(atlas::parse_omega(D8, "inflate cyclic 2 0 via mod-r2-s").is_zero());
  EXPECT_FALSE(atlas::parse_omega(D8, "inflate cyclic 2 1 via mod-r").is_zero());
  EXPECT_THROW(atlas::parse_omega(D8, "inflate cyclic 2 1 via mod-s"), PreconditionError);
  EXPECT_THROW(atlas::parse_omega(D8, "inflate cyclic 4 1 via mod-r2-s"), PreconditionError);
  EXPECT_THROW(atlas::parse_omega(D8, "inflate cyclic 2 1 via mod-q"), ParseError);
  EXPECT_THROW(atlas::parse_omega(D8, "inflate cyclic 2 1 mod-r2-s"), ParseError);
  EXPECT_THROW(atlas::parse_omega(D8, "cyclic 8 1"), PreconditionError);
  EXPECT_THROW(atlas::parse_omega(D8, "abelian 1"), PreconditionError);
  EXPECT_THROW(atlas::parse_omega(D8, "harmonic"), ParseError);

  auto Z4 = cyclic_group(4);
  auto w = atlas::parse_omega(Z4, "cyclic 4 1");
  EXPECT_TRUE(is_3cocycle(Z4, w));
  EXPECT_FALSE(solve_mu(Z4, w, whole_group(Z4)).cls.has_value());

  auto Z222 = abelian_group({2, 2, 2});
  EXPECT_TRUE(is_3cocycle(Z222, atlas::parse_omega(Z222, "abelian 0 0 0 0 0 0 1")));
  EXPECT_THROW(atlas::parse_omega(Z222, "abelian 0 0 0 0 0 0 2"), ParseError);
  EXPECT_THROW(atlas::parse_omega(Z222, "abelian 0 0"), ParseError);
}

TEST(OmegaSpec, FileInput) {
  auto D8 = dihedral_group(4);
  auto w = inflated_d8_omega(D8);
  const std::string path = ::testing::TempDir() + "twistkit_omega.txt";
  {
    std::ofstream f(path);
    write_cochain(f, D8, w, "D8");
  }
  EXPECT_EQ(atlas::parse_omega(D8, "file " + path), w);
  std::remove(path.c_str());
  EXPECT_ANY_THROW(atlas::parse_omega(D8, "file /nonexistent/omega.txt"));
}

TEST(Classify, CountsAndDeterminism) {
  for (auto [spec, n] : std::vector<std::pair<std::string, int>>{{"dihedral 4", 7}, {"abelian 2 2", 6}, {"alt 5", 1}}) {
    auto a = atlas::cmd_classify(job("classify", {spec}));
    auto b = atlas::cmd_classify(job("classify", {spec}));
    EXPECT_EQ(a.json, b.json);
    EXPECT_EQ(a.exit_code, 0);
    auto j = parse(a);
    EXPECT_EQ(j["counts"]["labels"], n);
    EXPECT_EQ(j["labels"].size(), static_cast<std::size_t>(n));
    for (auto& [k, v] : j["cross_checks"].items()) EXPECT_NE(v, "fail") << k;
  }
  auto j = parse(atlas::cmd_classify(job("classify", {"dihedral 4"})));
  EXPECT_EQ(j["modular"]["objects"], 22);
  EXPECT_EQ(j["cross_checks"]["oracle_equivalence"], "pass");
}

TEST(Verify, ExamplesAndBounds) {
  auto s3 = atlas::cmd_verify(job("verify", {"sym 3"}));
  EXPECT_EQ(s3.exit_code, 0);
  EXPECT_EQ(s3.report, "pass, 2 = 2\n");
  EXPECT_EQ(atlas::cmd_verify(job("verify", {"abelian 2 2"})).report, "pass, 6 = 6\n");
  auto tw = atlas::cmd_verify(job("verify", {"dihedral 4"}, {"inflate cyclic 2 1 via mod-r2-s"}));
  EXPECT_EQ(tw.exit_code, 0);
  EXPECT_EQ(parse(tw)["verdict"], "pass");
  EXPECT_THROW(atlas::cmd_verify(job("verify", {"sym 4"})), BoundError);
  EXPECT_THROW(atlas::cmd_verify(job("verify", {"quaternion"}, {"cyclic 8 1"})), PreconditionError);
  auto j = job("verify", {"sym 4"});
  j.bound = 24;
  EXPECT_EQ(atlas::cmd_verify(j).exit_code, 0);
}

TEST(Morita, Command) {
  EXPECT_THROW(atlas::cmd_morita(job("morita", {"dihedral 4"})), PreconditionError);
  auto r = parse(atlas::cmd_morita(job("morita", {"dihedral 4", "quaternion", "dihedral 4"})));
  EXPECT_EQ(r["matrix"][0][1]["evidence"], "distinguished");
  EXPECT_EQ(r["matrix"][0][2]["evidence"], "equivalent");
  EXPECT_THROW(atlas::cmd_morita(job("morita", {"dihedral 4", "quaternion"}, {"trivial", "search"})),
               PreconditionError);
}

TEST(Modular, Command) {
  auto j = parse(atlas::cmd_modular(job("modular", {"sym 3"})));
  EXPECT_EQ(j["objects"].size(), 8u);
  EXPECT_EQ(j["S"].size(), 8u);
  // unit row is d(X): a rational, so only the constant coefficient is nonzero
  for (std::size_t x = 0; x < 8; ++x) {
    const auto& c = j["S"][0][x];
    ASSERT_FALSE(c.empty());
    EXPECT_EQ(c[0].get<std::string>(), std::to_string(j["objects"][x]["dim"].get<int>()));
    for (std::size_t i = 1; i < c.size(); ++i) EXPECT_EQ(c[i].get<std::string>(), "0");
  }
  EXPECT_THROW(atlas::cmd_modular(job("modular", {"sym 5"})), BoundError);
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(atlas::exit_code_for(ParseError("x")), 2);
  EXPECT_EQ(atlas::exit_code_for(PreconditionError("x")), 2);
  EXPECT_EQ(atlas::exit_code_for(BoundError("x")), 3);
  EXPECT_EQ(atlas::exit_code_for(InvariantError("x")), 1);
  EXPECT_THROW(atlas::run(job("plot", {})), ParseError);
}
