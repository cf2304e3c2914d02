#include "doctest.h"

#include "ews/weights.hpp"

using namespace ews;

TEST_CASE("factor ranks") {
  CHECK(FactorType::sl(4).rank() == 3);
  CHECK(FactorType::sp(6).rank() == 3);
  CHECK(FactorType::so(7).rank() == 3);
  CHECK(FactorType::so(8).rank() == 4);
  CHECK(FactorType::so(3).rank() == 1);
}

TEST_CASE("weight arithmetic and dominance") {
  GroupShape shape{FactorType::sl(3), FactorType::sp(4)};
  Weight a = make_weight(shape, {{1, 0}, {0, 1}});
  Weight b = make_weight(shape, {{0, 2}, {1, 0}});
  Weight s = a + b;
  CHECK(s.c[0][0] == 1);
  CHECK(s.c[0][1] == 2);
  CHECK(s.c[1][0] == 1);
  CHECK(s.dominant());
  CHECK((a - b).dominant() == false);
  CHECK(Weight::zero(shape).is_zero());
  CHECK(!a.is_zero());
}

TEST_CASE("epsilon coordinates round trip") {
  FactorType sl3 = FactorType::sl(3);
  for (std::vector<Int> c : {std::vector<Int>{1, 0}, {0, 1}, {2, 3}}) {
    auto eps = to_epsilon_coords(sl3, c);
    Rat sum(0);
    for (const auto& e : eps) sum += e;
    CHECK(sum == 0);  // traceless convention
    CHECK(from_epsilon_coords(sl3, eps) == c);
  }
  FactorType so5 = FactorType::so(5);
  auto eps = to_epsilon_coords(so5, {0, 1});  // spin weight (1/2, 1/2)
  CHECK(eps[0] == Rat(1, 2));
  CHECK(eps[1] == Rat(1, 2));
  CHECK(!is_torus_integral(so5, {0, 1}));
  CHECK(is_torus_integral(so5, {0, 2}));
  CHECK(is_torus_integral(so5, {1, 0}));
}

TEST_CASE("torus evaluation") {
  GroupShape shape{FactorType::sl(2)};
  TorusElement t;
  t.t.push_back({Rat(3)});
  // pi_1 of SL_2 evaluates to the first torus parameter
  Weight w = make_weight(shape, {{1}});
  CHECK(eval_on_torus(shape, w, t) == 3);
  Weight w2 = make_weight(shape, {{2}});
  CHECK(eval_on_torus(shape, w2, t) == 9);

  Mat d = torus_matrix(FactorType::sl(2), {Rat(3)});
  CHECK(d.at(0, 0) == 3);
  CHECK(d.at(1, 1) == Rat(1, 3));
  Mat sp = torus_matrix(FactorType::sp(4), {Rat(2), Rat(5)});
  CHECK(sp.at(0, 0) == 2);
  CHECK(sp.at(1, 1) == 5);
  CHECK(sp.at(2, 2) == Rat(1, 5));
  CHECK(sp.at(3, 3) == Rat(1, 2));
  Mat so = torus_matrix(FactorType::so(5), {Rat(2), Rat(3)});
  CHECK(so.at(2, 2) == 1);
  CHECK(so.at(4, 4) == Rat(1, 2));
}

TEST_CASE("torus evaluation rejects spin weights") {
  GroupShape shape{FactorType::so(5)};
  TorusElement t;
  t.t.push_back({Rat(2), Rat(3)});
  Weight spin = make_weight(shape, {{0, 1}});
  CHECK_THROWS_AS(eval_on_torus(shape, spin, t), std::domain_error);
  Weight vec = make_weight(shape, {{1, 0}});
  CHECK(eval_on_torus(shape, vec, t) == 2);
}

TEST_CASE("rank of weight lists") {
  GroupShape shape{FactorType::sl(2), FactorType::sl(3)};
  std::vector<ExtendedWeight> ws;
  ws.push_back({make_weight(shape, {{1}, {0, 0}}), 1});
  ws.push_back({make_weight(shape, {{0}, {1, 0}}), 0});
  ws.push_back({make_weight(shape, {{1}, {1, 0}}), 1});  // dependent on the first two
  CHECK(rank_of_weights(shape, ws) == 2);
  ws.pop_back();
  ws.push_back({make_weight(shape, {{1}, {1, 0}}), 2});  // character breaks the dependence
  CHECK(rank_of_weights(shape, ws) == 3);
}

TEST_CASE("weight strings") {
  GroupShape shape{FactorType::sl(3), FactorType::sp(4)};
  Weight w = make_weight(shape, {{1, 0}, {0, 2}});
  CHECK(weight_to_string(shape, w) == "pi_1+2*phi_2");
  ExtendedWeight ew{w, -1};
  CHECK(extended_weight_to_string(shape, ew) == "(pi_1+2*phi_2, -chi_0)");
  CHECK(extended_weight_to_string(shape, {w, 0}) == "pi_1+2*phi_2");
  CHECK(weight_to_string(shape, Weight::zero(shape)) == "0");
}
