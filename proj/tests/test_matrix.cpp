#include "doctest.h"

#include "ews/matrix.hpp"

using namespace ews;

TEST_CASE("identity and antidiag") {
  Mat e = Mat::identity(3);
  CHECK(e.at(0, 0) == 1);
  CHECK(e.at(0, 1) == 0);
  CHECK(e.is_identity());
  CHECK(e.is_upper_unitriangular());
  Mat f = Mat::antidiag_ones(3);
  CHECK(f.at(0, 2) == 1);
  CHECK(f.at(1, 1) == 1);
  CHECK(f.at(2, 0) == 1);
  CHECK(f.at(0, 0) == 0);
  CHECK(f * f == Mat::identity(3));
}

TEST_CASE("skew form") {
  Mat om = Mat::skew_form(4);
  CHECK(om.at(0, 3) == 1);
  CHECK(om.at(1, 2) == 1);
  CHECK(om.at(2, 1) == -1);
  CHECK(om.at(3, 0) == -1);
  CHECK(om.transpose() == om.scaled(Rat(-1)));
  CHECK(om * om == Mat::identity(4).scaled(Rat(-1)));
}

TEST_CASE("product and inverse") {
  Mat a{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
  Mat b = a.inverse();
  CHECK(a * b == Mat::identity(2));
  CHECK(b * a == Mat::identity(2));
  CHECK(a.det() == 1);
  Mat r(2, 3);
  r.at(0, 0) = 1;
  r.at(1, 2) = 5;
  Mat p = a * r;  // rectangular product
  CHECK(p.rows() == 2);
  CHECK(p.cols() == 3);
  CHECK(p.at(0, 0) == 2);
  CHECK(p.at(0, 2) == 5);
}

TEST_CASE("antitranspose") {
  Mat a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  Mat t = a.antitranspose();
  // reflection across the antidiagonal: (i,j) <- (n-1-j, n-1-i)
  CHECK(t.at(0, 0) == 4);
  CHECK(t.at(0, 1) == 2);
  CHECK(t.at(1, 0) == 3);
  CHECK(t.at(1, 1) == 1);
  Mat u(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) u.at(i, j) = Rat(3 * i + j);
  CHECK(u.antitranspose().antitranspose() == u);
  CHECK((u * u).antitranspose() == u.antitranspose() * u.antitranspose());
}

TEST_CASE("minor conventions are 1-based") {
  Mat a(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = Rat(3 * i + j + 1);
  CHECK(a.minor_det({1}, {1}) == 1);
  CHECK(a.minor_det({3}, {2}) == 8);
  CHECK(a.minor_det({1, 2}, {1, 2}) == Rat(1) * 5 - Rat(2) * 4);
  CHECK(a.minor_det({1, 2, 3}, {1, 2, 3}) == a.det());
  // column order matters: swapping columns flips the sign
  CHECK(a.minor_det({1, 2}, {2, 1}) == -a.minor_det({1, 2}, {1, 2}));
}

TEST_CASE("blocks") {
  Mat a = Mat::identity(4);
  Mat b(2, 2);
  b.at(0, 0) = 5;
  b.at(1, 1) = 7;
  a.set_block(1, 1, b);
  CHECK(a.at(1, 1) == 5);
  CHECK(a.at(2, 2) == 7);
  CHECK(a.block(1, 1, 2, 2) == b);
  CHECK(a.block(0, 0, 1, 1) == Mat::identity(1));
}

TEST_CASE("unitriangular predicate") {
  Mat a = Mat::identity(3);
  a.at(0, 2) = Rat(7, 3);
  CHECK(a.is_upper_unitriangular());
  a.at(2, 0) = 1;
  CHECK(!a.is_upper_unitriangular());
  Mat d = Mat::identity(2).scaled(Rat(2));
  CHECK(!d.is_upper_unitriangular());
}
