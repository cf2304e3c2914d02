#include <utility>
#include <vector>

#include "doctest.h"
#include "ews/cases.hpp"
#include "ews/functions.hpp"
#include "ews/matrix.hpp"

using namespace ews;

namespace {

using Sizes = std::vector<std::pair<int, CaseParams>>;

}  // namespace

TEST_CASE("distinguished catalog values") {
  // coupled symplectic pair: the cross pairing vanishes at the identity
  CaseData c5 = make_case(5, {1, 1, 0});
  GroupElement id2{{Mat::identity(2), Mat::identity(2)}};
  CHECK(evaluate_function(c5, "D", id2) == 0);
  Mat q{{Rat(1), Rat(1)}, {Rat(-1), Rat(0)}};
  CHECK(evaluate_function(c5, "D", GroupElement{{Mat::identity(2), q}}) == 1);

  CaseData c52 = make_case(5, {2, 2, 0});
  GroupElement id4{{Mat::identity(4), Mat::identity(4)}};
  CHECK(evaluate_function(c52, "D", id4) == 0);
  CHECK(evaluate_function(c52, "Delta", id4) == 0);

  // rank-3 matrix case at the reversal point: Delta dies, Phi2 survives
  CaseData c3 = make_case(3, {3, 2, 0});
  GroupElement w{{Mat::antidiag_ones(3).scaled(Rat(-1)), Mat::identity(4)}};
  CHECK(evaluate_function(c3, "Delta", w) == 0);
  CHECK(evaluate_function(c3, "Phi2", w) == -1);
  GroupElement e3{{Mat::identity(3), Mat::identity(4)}};
  CHECK(evaluate_function(c3, "Delta", e3) == 1);
  CHECK(evaluate_function(c3, "D", e3) == 0);

  // symplectic chain with the middle factor at its defining form
  CaseData c8 = make_case(8, {1, 1, 0});
  GroupElement s{{Mat::identity(2), Mat::skew_form(4), Mat::identity(2)}};
  CHECK(evaluate_function(c8, "Delta", s) == -1);
  CHECK(evaluate_function(c8, "Delta_1", s) == 0);
  CHECK(evaluate_function(c8, "delta_1", s) == 1);

  CHECK_THROWS(evaluate_function(c5, "no_such_function", id2));
}

TEST_CASE("equivariance across small catalogs") {
  Rng rng(7);
  Sizes sizes{{1, {2, 0, 0}}, {2, {4, 0, 0}}, {3, {3, 2, 0}}, {4, {5, 1, 0}},
              {5, {2, 1, 0}}, {6, {3, 0, 0}}, {7, {1, 2, 1}}, {8, {2, 1, 0}}};
  for (const auto& [id, p] : sizes) {
    CaseData cd = make_case(id, p);
    CheckResult r = verify_all_equivariance(cd, rng, 3);
    CHECK_MESSAGE(r.ok, "case ", id, ": ", r.detail);
  }
}

TEST_CASE("equivariance detects a corrupted function") {
  CaseData cd = make_case(5, {2, 2, 0});
  Rng rng(11);

  WeightFunction bad = find_function(cd, "D");
  auto orig = bad.eval;
  bad.eval = [orig](const GroupElement& g) { return orig(g) + 1; };
  CHECK(!verify_equivariance(cd, bad, rng, 6).ok);

  // right value, wrong claimed weight
  WeightFunction mixed = find_function(cd, "D");
  mixed.weight = find_function(cd, "Delta").weight;
  CHECK(!verify_equivariance(cd, mixed, rng, 6).ok);
}

TEST_CASE("catalog relations hold at random points") {
  Rng rng(3);
  // The square identity holds down to the smallest odd size (k = 1).
  for (int n : {3, 4, 5}) {
    CaseData cd = make_case(2, {n, 0, 0});
    CHECK(!cd.relations.empty());
    CheckResult r = verify_relations(cd, rng, 4);
    CHECK_MESSAGE(r.ok, "case 2 n=", n, ": ", r.detail);
  }
  CaseData c3 = make_case(3, {3, 1, 0});
  CHECK(c3.relations.size() == 2);  // constant corner at m = 1 plus the n = 3 collapse
  CHECK(verify_relations(c3, rng, 4).ok);
  CaseData c5 = make_case(5, {1, 1, 0});
  CHECK(c5.relations.size() == 2);
  CHECK(verify_relations(c5, rng, 4).ok);
  CaseData c6 = make_case(6, {3, 0, 0});
  CHECK(!c6.relations.empty());
  CHECK(verify_relations(c6, rng, 4).ok);
  CaseData c8 = make_case(8, {1, 2, 0});
  CHECK(!c8.relations.empty());
  CHECK(verify_relations(c8, rng, 4).ok);
}

TEST_CASE("stabilizer invariances") {
  Rng rng(5);
  Sizes sizes{{1, {2, 0, 0}}, {2, {4, 0, 0}}, {3, {4, 2, 0}}, {4, {5, 1, 0}},
              {5, {2, 2, 0}}, {6, {3, 0, 0}}, {7, {2, 1, 1}}, {8, {1, 2, 0}}};
  for (const auto& [id, p] : sizes) {
    CaseData cd = make_case(id, p);
    CheckResult l = verify_left_u_invariance(cd, rng, 3);
    CHECK_MESSAGE(l.ok, "case ", id, " left: ", l.detail);
    CheckResult r = verify_right_h0_invariance(cd, rng, 3);
    CHECK_MESSAGE(r.ok, "case ", id, " right: ", r.detail);
    if (!cd.central_sp.empty()) {
      CheckResult c = verify_central_invariance(cd, rng, 3);
      CHECK_MESSAGE(c.ok, "case ", id, " central: ", c.detail);
    }
  }
}

TEST_CASE("sampled base points avoid the vanishing locus") {
  Rng rng(9);
  Sizes sizes{{3, {3, 2, 0}}, {6, {4, 0, 0}}, {7, {1, 1, 1}}};
  for (const auto& [id, p] : sizes) {
    CaseData cd = make_case(id, p);
    for (int t = 0; t < 3; ++t) {
      GroupElement g = random_m_point(cd, rng);
      for (const auto& name : cd.m_set) CHECK(evaluate_function(cd, name, g) != 0);
    }
  }
}

TEST_CASE("subgroup samples respect the character split") {
  Rng rng(13);
  CaseData c3 = make_case(3, {4, 2, 0});
  for (int t = 0; t < 5; ++t) CHECK(c3.sample_h(rng, true).chi0 == 1);
  bool varied = false;
  for (int t = 0; t < 8; ++t)
    if (c3.sample_h(rng, false).chi0 != 1) varied = true;
  CHECK(varied);

  // the companion case without the torus never moves the character
  CaseData c4 = make_case(4, {5, 2, 0});
  for (int t = 0; t < 5; ++t) CHECK(c4.sample_h(rng, false).chi0 == 1);
}

TEST_CASE("irreducibility reports") {
  IrreducibilityReport r3 = check_all_irreducible(make_case(3, {3, 2, 0}));
  CHECK(r3.ok);
  bool used_a2 = false;
  for (const auto& c : r3.certs) {
    CHECK(c.ok);
    if (c.name == "Phi2") {
      CHECK(c.method == "a2");
      used_a2 = true;
    }
  }
  CHECK(used_a2);

  IrreducibilityReport r7 = check_all_irreducible(make_case(7, {2, 2, 2}));
  CHECK(r7.ok);
  for (const auto& c : r7.certs) CHECK(c.method == "a1");

  IrreducibilityReport r8 = check_all_irreducible(make_case(8, {1, 1, 0}));
  CHECK(r8.ok);
  for (const auto& c : r8.certs)
    if (c.name == "Delta") CHECK(c.method == "a2");
}
