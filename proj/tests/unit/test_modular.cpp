#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "twistkit/catalog.hpp"
#include "twistkit/classify.hpp"
#include "twistkit/modular.hpp"

using namespace twistkit;
using namespace tk_test;

namespace {

struct Case {
  std::string name;
  ModularData data;
};

// Untwisted doubles of every group of order <= 8 and a few of order <= 16, plus twisted
// doubles for random cocycles on groups of order <= 8.
const std::vector<Case>& cases() {
  static const std::vector<Case> c = [] {
    std::vector<Case> out;
    Rng rng(77);
    for (const auto& e : catalog_upto(16)) {
      if (e.group.order() <= 8 || e.group.order() == 12 || e.name == "Z2^4" || e.name == "D16") {
        out.push_back({e.name, s_matrix(e.group, Cochain())});
      }
      if (e.group.order() <= 8) out.push_back({e.name + "/w", s_matrix(e.group, random_cocycle(e.group, rng))});
    }
    auto D8 = dihedral_group(4);
    out.push_back({"D8/inflated", s_matrix(D8, inflated_d8_omega(D8))});
    return out;
  }();
  return c;
}

Cyclotomic dim_c(const ModularData& d, int x) { return Cyclotomic(Rational(d.objects[x].dim)); }

}  // namespace

TEST(ModularData, ObjectCounts) {
  EXPECT_EQ(s_matrix(cyclic_group(2), Cochain()).size(), 4);
  EXPECT_EQ(s_matrix(symmetric_group(3), Cochain()).size(), 8);
  EXPECT_EQ(s_matrix(dihedral_group(4), Cochain()).size(), 22);
  EXPECT_EQ(s_matrix(quaternion_group(), Cochain()).size(), 22);
  EXPECT_EQ(s_matrix(abelian_group({2, 2, 2}), Cochain()).size(), 64);
  EXPECT_EQ(s_matrix(cyclic_group(3), standard_cocycle(cyclic_group(3), cyclic_cocycle(3, 1))).size(), 9);
  EXPECT_EQ(simple_objects(alternating_group(4), Cochain()).size(), 14u);
}

TEST(ModularData, ToricCode) {
  auto d = s_matrix(cyclic_group(2), Cochain());
  int minus = 0;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      ASSERT_TRUE(d.S[x][y] == Cyclotomic(Rational(1)) || d.S[x][y] == Cyclotomic(Rational(-1)));
      minus += d.S[x][y] == Cyclotomic(Rational(-1));
    }
  }
  EXPECT_EQ(minus, 6);
  auto t = twist_spectrum(d);
  EXPECT_EQ(std::count(t.begin(), t.end(), "1/2"), 1);
}

// Symmetric S with unit row d, S^2 = |G|^2 C, sum of d^2 = |G|^2, Gauss sum = |G|.
TEST(ModularData, ModularIdentities) {
  for (const auto& c : cases()) {
    const auto& d = c.data;
    const int n = d.size();
    const std::int64_t g = d.G.order();
    std::int64_t sumsq = 0;
    Cyclotomic gauss;
    for (int x = 0; x < n; ++x) {
      EXPECT_EQ(d.S[0][x], dim_c(d, x)) << c.name;
      sumsq += d.objects[x].dim * d.objects[x].dim;
      gauss += rou_to_cyc(d.objects[x].twist, d.conductor) * Rational(d.objects[x].dim * d.objects[x].dim);
      for (int y = 0; y < x; ++y) ASSERT_EQ(d.S[x][y], d.S[y][x]) << c.name;
    }
    EXPECT_EQ(sumsq, g * g) << c.name;
    EXPECT_EQ(gauss, Cyclotomic(Rational(g))) << c.name;
    if (n > 64) continue;
    for (int x = 0; x < n; ++x) {
      int dual = dual_object(d, x);
      for (int y = 0; y < n; ++y) {
        Cyclotomic s;
        for (int z = 0; z < n; ++z) s += d.S[x][z] * d.S[z][y];
        EXPECT_EQ(s, Cyclotomic(Rational(y == dual ? g * g : 0))) << c.name;
      }
    }
  }
}

TEST(ModularData, UntwistedAndTwistedFormulasAgreeForTrivialOmega) {
  for (const auto& name : {"S3", "D8", "Q8", "Z2^2"}) {
    FiniteGroup G;
    for (const auto& e : small_group_catalog()) {
      if (e.name == name) G = e.group;
    }
    auto d = s_matrix(G, Cochain());
    for (int x = 0; x < d.size(); ++x) {
      for (int y = 0; y < d.size(); ++y) {
        EXPECT_EQ(s_entry_untwisted(d, x, y), s_entry_twisted(d, x, y)) << name;
      }
    }
  }
}

TEST(ModularData, CentralizeRoutesAgree) {
  Rng rng(4);
  for (const auto& c : cases()) {
    const auto& d = c.data;
    const int n = d.size();
    int bad = 0;
    auto check = [&](int x, int y) { bad += centralize(d, x, y) != centralize_by_conditions(d, x, y); };
    if (n <= 64) {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) check(x, y);
      }
    } else {
      for (int t = 0; t < 2000; ++t) check(rng.below(n), rng.below(n));
    }
    EXPECT_EQ(bad, 0) << c.name;
  }
}

TEST(Verlinde, IntegralAndConsistent) {
  for (const auto& c : cases()) {
    const auto& d = c.data;
    if (d.size() > 48) continue;
    auto N = fusion_coefficients(d);
    const int n = d.size();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        std::int64_t sum = 0;
        for (int x = 0; x < n; ++x) {
          ASSERT_GE(N.at(a, b, x), 0);
          EXPECT_EQ(N.at(a, b, x), N.at(b, a, x));
          sum += N.at(a, b, x) * d.objects[x].dim;
        }
        EXPECT_EQ(sum, d.objects[a].dim * d.objects[b].dim) << c.name;
        EXPECT_EQ(N.at(0, a, b), a == b ? 1 : 0);
        EXPECT_EQ(N.at(a, dual_object(d, a), 0), 1);
      }
    }
  }
  EXPECT_THROW(fusion_coefficients(s_matrix(abelian_group({2, 2, 2}), Cochain())), BoundError);
}

// Lemma FR / FR 1: for a label (H, B) and a in H, the characters of C_G(a) restricting to
// deg chi B(a, -) on H have total squared degree |C_G(a)| / |H|.
TEST(Lagrangian, FrCountingIdentity) {
  for (const auto& c : cases()) {
    const auto& d = c.data;
    for (const auto& L : lagrangian_labels(d.G, d.omega)) {
      for (std::size_t k = 0; k < d.centralizers.size(); ++k) {
        const auto& cd = d.centralizers[k];
        if (!L.H.contains(cd.rep)) continue;
        std::int64_t sq = 0;
        for (int chi = 0; chi < cd.table.size(); ++chi) {
          const int deg = cd.table.degrees[chi];
          bool match = true;
          for (int h : L.H.elements) {
            auto want = rou_to_cyc(L.B(cd.rep, h), d.conductor) * Rational(deg);
            match = match && cd.table.value(chi, cd.local_of[h]).lift(d.conductor) == want;
          }
          if (match) sq += static_cast<std::int64_t>(deg) * deg;
        }
        EXPECT_EQ(sq * L.H.order(), cd.C.order()) << c.name;
      }
    }
  }
}

TEST(Lagrangian, PropositionLAndRoundTrip) {
  for (const auto& c : cases()) {
    const auto& d = c.data;
    for (const auto& L : lagrangian_labels(d.G, d.omega)) {
      auto S = build_subcategory(d, L);
      auto chk = check_lagrangian(d, S);
      EXPECT_TRUE(chk.ok()) << c.name << ": " << chk.failure;
      std::int64_t dim = 0;
      for (int x : S) {
        EXPECT_TRUE(d.objects[x].twist.is_one());
        dim += d.objects[x].dim * d.objects[x].dim;
        for (int y : S) EXPECT_EQ(d.S[x][y], dim_c(d, x) * dim_c(d, y));
      }
      EXPECT_EQ(dim, d.G.order());
      auto back = extract_label(d, S);
      EXPECT_EQ(back.H, L.H) << c.name;
      EXPECT_EQ(back.B, L.B) << c.name;
    }
  }
}

TEST(Lagrangian, FailuresNameTheProperty) {
  auto d = s_matrix(symmetric_group(3), Cochain());
  auto chk = check_lagrangian(d, {0});
  EXPECT_FALSE(chk.ok());
  EXPECT_NE(chk.failure.find("Proposition L"), std::string::npos);
  int twisted = -1;
  for (int x = 0; x < d.size(); ++x) {
    if (!d.objects[x].twist.is_one() && twisted < 0) twisted = x;
  }
  ASSERT_GE(twisted, 0);
  EXPECT_FALSE(check_lagrangian(d, {0, twisted}).twists_trivial);
}

TEST(Lagrangian, BruteForceMatchesLabelsOnSmallCases) {
  for (const auto& c : cases()) {
    if (c.data.G.order() > 8) continue;
    std::vector<ObjectSet> built;
    for (const auto& L : lagrangian_labels(c.data.G, c.data.omega)) built.push_back(build_subcategory(c.data, L));
    auto brute = brute_force_lagrangians(c.data);
    std::sort(built.begin(), built.end());
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(built, brute) << c.name;
  }
}

TEST(Equivalence, DoublesOfD8AndQ8) {
  auto d8 = s_matrix(dihedral_group(4), Cochain());
  auto q8 = s_matrix(quaternion_group(), Cochain());
  EXPECT_FALSE(modular_equivalent(d8, q8).equivalent);
  auto self = modular_equivalent(d8, d8);
  ASSERT_TRUE(self.equivalent);
  for (int x = 0; x < d8.size(); ++x) {
    for (int y = 0; y < d8.size(); ++y) EXPECT_EQ(d8.S[x][y], d8.S[self.permutation[x]][self.permutation[y]]);
  }
  auto z4 = s_matrix(cyclic_group(4), Cochain());
  auto z22 = s_matrix(abelian_group({2, 2}), Cochain());
  EXPECT_FALSE(modular_equivalent(z4, z22).equivalent);
}
