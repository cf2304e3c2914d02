#include "doctest.h"

#include "ews/groups.hpp"

using namespace ews;

TEST_CASE("form checks on generated elements") {
  Rng rng(3);
  for (FactorType f : {FactorType::sl(3), FactorType::sp(4), FactorType::sp(6),
                       FactorType::so(4), FactorType::so(5), FactorType::so(7)}) {
    for (int t = 0; t < 5; ++t) {
      Mat g = random_element(f, rng, 8);
      CHECK(check_invariant_form(g, f));
      CHECK(check_invariant_form(g.inverse(), f));
      Mat u = random_unipotent(f, rng, 8);
      CHECK(u.is_upper_unitriangular());
      CHECK(check_invariant_form(u, f));
    }
  }
  Mat bad = Mat::identity(4).scaled(Rat(2));
  CHECK(!check_invariant_form(bad, FactorType::sp(4)));
  CHECK(!check_invariant_form(bad, FactorType::sl(4)));
}

TEST_CASE("symplectic block constructions") {
  Rng rng(5);
  FactorType sp6 = FactorType::sp(6);
  Mat v = random_element(FactorType::sl(3), rng, 6);
  Mat g1 = symplectic_type1(v);
  CHECK(check_invariant_form(g1, sp6));
  CHECK(g1.block(0, 0, 3, 3) == v);

  Mat c(3, 3);
  c.at(0, 0) = 2;
  c.at(2, 2) = 2;  // antidiagonal symmetry pairs (1,1) with (3,3)
  c.at(1, 1) = -5;
  c.at(0, 2) = 7;
  Mat g2 = symplectic_type2(c);
  CHECK(check_invariant_form(g2, sp6));
  CHECK(g2.is_upper_unitriangular());
  Mat g3 = symplectic_type2(c, true);
  CHECK(check_invariant_form(g3, sp6));
  CHECK(g3.block(3, 0, 3, 3) == c);

  Mat asym(3, 3);
  asym.at(0, 0) = 1;  // (3,3) stays 0, not symmetric about the antidiagonal
  CHECK_THROWS(symplectic_type2(asym));
}

TEST_CASE("embedding at selected coordinates") {
  Mat h(2, 2);
  h.at(0, 0) = 2;
  h.at(0, 1) = 3;
  h.at(1, 0) = 4;
  h.at(1, 1) = 5;
  Mat e = embed_at(4, {1, 4}, h);
  CHECK(e.at(0, 0) == 2);
  CHECK(e.at(0, 3) == 3);
  CHECK(e.at(3, 0) == 4);
  CHECK(e.at(3, 3) == 5);
  CHECK(e.at(1, 1) == 1);
  CHECK(e.at(2, 2) == 1);
  CHECK(e.at(0, 1) == 0);
}

TEST_CASE("central symplectic embedding satisfies the Gram split") {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    Mat s = random_element(FactorType::sp(4), rng, 8);
    Mat big = central_sp_embed(8, s);
    CHECK(check_invariant_form(big, FactorType::sp(8)));
    CHECK(gram_columns_check(big, 2));
  }
  // corner columns of the embedded element are standard basis vectors
  Mat s = random_element(FactorType::sp(2), rng, 6);
  Mat big = central_sp_embed(4, s);
  CHECK(big.at(0, 0) == 1);
  CHECK(big.at(3, 3) == 1);
  CHECK(big.at(1, 0) == 0);
}

TEST_CASE("orthogonal step embedding") {
  Rng rng(13);
  for (int n = 3; n <= 6; ++n) {
    FactorType small = FactorType::so(n), large = FactorType::so(n + 1);
    for (int t = 0; t < 5; ++t) {
      Mat p = random_element(small, rng, 8);
      Mat q = so_step_embed(p);
      CHECK(check_invariant_form(q, large));
      Mat u = random_unipotent(small, rng, 6);
      CHECK(so_step_embed(u).is_upper_unitriangular());
    }
    CHECK(so_step_embed(Mat::identity(n)) == Mat::identity(n + 1));
  }
}

TEST_CASE("group element tuples") {
  GroupShape shape{FactorType::sl(2), FactorType::sp(4)};
  GroupElement e = GroupElement::identity(shape);
  CHECK(e.g[0] == Mat::identity(2));
  CHECK(e.g[1] == Mat::identity(4));
  Rng rng(17);
  GroupElement a;
  a.g.push_back(random_element(shape[0], rng, 6));
  a.g.push_back(random_element(shape[1], rng, 6));
  CHECK(a * a.inverse() == e);
  CHECK((a * e) == a);
}

TEST_CASE("deterministic randomness") {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.draw(-5, 5) == b.draw(-5, 5));
  Rng c(42);
  Mat m1 = random_element(FactorType::sp(4), c, 8);
  Rng d(42);
  Mat m2 = random_element(FactorType::sp(4), d, 8);
  CHECK(m1 == m2);
  for (int i = 0; i < 20; ++i) CHECK(a.draw_nonzero(-3, 3) != 0);
}
