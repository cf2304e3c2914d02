#include "doctest.h"

#include "ews/linalg.hpp"

using namespace ews;

TEST_CASE("rank") {
  Mat a(3, 3);
  a.at(0, 0) = 1;
  a.at(1, 1) = 1;
  CHECK(rank(a) == 2);
  CHECK(rank(Mat::identity(4)) == 4);
  CHECK(rank(Mat(2, 5)) == 0);
  Mat b(2, 2);
  b.at(0, 0) = 1;
  b.at(0, 1) = 2;
  b.at(1, 0) = 2;
  b.at(1, 1) = 4;
  CHECK(rank(b) == 1);
}

TEST_CASE("solve_unique") {
  Mat a{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
  auto x = solve_unique(a, {Rat(3), Rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  // inconsistent overdetermined system
  Mat c(3, 1);
  c.at(0, 0) = 1;
  c.at(1, 0) = 1;
  CHECK(!solve_unique(c, {Rat(1), Rat(2), Rat(0)}).has_value());
}

TEST_CASE("nullspace") {
  Mat a(1, 3);
  a.at(0, 0) = 1;
  a.at(0, 1) = 1;
  a.at(0, 2) = 1;
  auto ns = nullspace(a);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) {
    Rat s = v[0] + v[1] + v[2];
    CHECK(s == 0);
  }
  CHECK(nullspace(Mat::identity(3)).empty());
}

TEST_CASE("smith normal form") {
  Mat a(2, 2);
  a.at(0, 0) = 2;
  a.at(0, 1) = 4;
  a.at(1, 0) = 6;
  a.at(1, 1) = 8;
  Snf s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(s.U.det() * s.U.det() == 1);
  CHECK(s.V.det() * s.V.det() == 1);
  CHECK(s.D.at(0, 0) == 2);
  CHECK(s.D.at(1, 1) == 4);  // divisors 2 | 4, det = +-8
  CHECK(s.D.at(0, 1) == 0);
  CHECK(s.D.at(1, 0) == 0);
}

TEST_CASE("integer solve") {
  Mat a(2, 2);
  a.at(0, 0) = 2;
  a.at(1, 1) = 3;
  auto sol = snf_solve(a, {Int(4), Int(9)});
  REQUIRE(sol.has_value());
  CHECK(sol->particular[0] == 2);
  CHECK(sol->particular[1] == 3);
  CHECK(sol->kernel.empty());
  CHECK(!snf_solve(a, {Int(1), Int(0)}).has_value());  // 2x = 1 has no integer solution

  Mat b(1, 2);
  b.at(0, 0) = 2;
  b.at(0, 1) = 3;
  auto line = snf_solve(b, {Int(1)});
  REQUIRE(line.has_value());
  CHECK(line->kernel.size() == 1);
  Int k0 = line->kernel[0][0], k1 = line->kernel[0][1];
  CHECK(Int(2) * k0 + Int(3) * k1 == 0);
  CHECK(Int(2) * line->particular[0] + Int(3) * line->particular[1] == 1);
}
