#include "ews/canonical.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "ews/linalg.hpp"

namespace ews {

namespace {

// Accumulates one conceptual reduction step: left multipliers stay upper
// unitriangular, right multipliers stay in the reduction subgroup, and every
// catalog value is rechecked against the starting point when the step closes.
struct Reducer {
  const CaseData& cd;
  GroupElement g;
  std::vector<TranscriptStep> steps;
  std::vector<Rat> base;

  GroupElement curL, curR;
  std::string lbl;

  Reducer(const CaseData& c, const GroupElement& g0) : cd(c), g(g0) {
    for (const auto& f : cd.functions) {
      Rat v = f.eval(g);
      base.push_back(v);
    }
    for (const auto& name : cd.m_set) {
      Rat v = base[index_of(name)];
      if (v == 0) throw std::domain_error("reduction needs " + name + " nonzero at the point");
    }
  }

  size_t index_of(const std::string& name) const {
    for (size_t i = 0; i < cd.functions.size(); ++i)
      if (cd.functions[i].name == name) return i;
    throw std::logic_error("no catalog entry named " + name);
  }

  // Catalog value at the original point; names dropped at degenerate sizes
  // stand for the constant 1.
  Rat val(const std::string& name) const {
    if (!has_function(cd, name)) return Rat(1);
    return base[index_of(name)];
  }

  void begin(const std::string& label) {
    lbl = label;
    curL = GroupElement::identity(cd.shape);
    curR = GroupElement::identity(cd.shape);
  }

  void left(int factor, const Mat& u) {
    g.g[factor] = u * g.g[factor];
    curL.g[factor] = u * curL.g[factor];
  }

  void right(const GroupElement& h) {
    g = g * h;
    curR = curR * h;
  }

  void right_factor(int factor, const Mat& h) {
    GroupElement e = GroupElement::identity(cd.shape);
    e.g[factor] = h;
    right(e);
  }

  void end() {
    steps.push_back({lbl, curL, curR});
    for (size_t i = 0; i < cd.functions.size(); ++i) {
      Rat v = cd.functions[i].eval(g);
      if (v != base[i])
        throw std::logic_error(cd.functions[i].name + " changed during step '" + lbl + "'");
    }
  }
};

// Left clearing of the (first, last) column pair of a symplectic factor whose
// bottom two pair entries are already (1, *) / (0, Delta).  Afterwards the
// pair reads e_{2n-1} and Delta e_{2n} - e_2.
void sp_pair_clear(Reducer& rd, int factor, const Rat& Delta) {
  int two_n = rd.g.g[factor].rows(), n = two_n / 2;
  auto M = [&](int i, int j) {  // 1-based, j is 1 or 2 for the pair columns
    return rd.g.g[factor].at(i - 1, j == 1 ? 0 : two_n - 1);
  };
  if (n == 1) {
    Rat c = -M(1, 2);
    Mat C(1, 1);
    C.at(0, 0) = c;
    rd.left(factor, symplectic_type2(C));
    return;
  }
  // first column: top rows except row 2, each with its antidiagonal mirror
  for (int i = 1; i <= n; ++i) {
    if (i == 2) continue;
    Rat c = -M(i, 1);
    Mat C(n, n);
    C.at(i - 1, n - 2) = c;
    C.at(1, n - i) = c;
    rd.left(factor, symplectic_type2(C));
  }
  for (int j = n + 1; j <= 2 * n - 2; ++j) {
    int b = j - n;
    Rat c = -M(j, 1);
    Mat V = Mat::identity(n);
    V.at(1, n - b) = -c;
    rd.left(factor, symplectic_type1(V));
  }
  {
    Rat c = -M(2, 1);
    Mat C(n, n);
    C.at(1, n - 2) = c;
    rd.left(factor, symplectic_type2(C));
  }
  // last column: everything above the Delta, row 1 last
  {
    Rat c = -M(2 * n - 1, 2) / Delta;
    Mat V = Mat::identity(n);
    V.at(0, 1) = -c;
    rd.left(factor, symplectic_type1(V));
  }
  for (int j = n + 1; j <= 2 * n - 2; ++j) {
    int b = j - n;
    Rat c = -M(j, 2) / Delta;
    Mat V = Mat::identity(n);
    V.at(0, n - b) = -c;
    rd.left(factor, symplectic_type1(V));
  }
  for (int i = 3; i <= n; ++i) {
    Rat c = -M(i, 2) / Delta;
    Mat C(n, n);
    C.at(i - 1, n - 1) = c;
    C.at(0, n - i) = c;
    rd.left(factor, symplectic_type2(C));
  }
  if (M(2, 2) != Rat(-1))
    throw std::logic_error("pair clearing: entry forced by the pairing is not -1");
  {
    Rat c = -M(1, 2) / Delta;
    Mat C(n, n);
    C.at(0, n - 1) = c;
    rd.left(factor, symplectic_type2(C));
  }
}

// Concentrates the (first, last) column pair of a symplectic factor on its
// last rows; 2x2 factors need a single shear, larger ones the pair lemma.
void sp_pair_tail(Reducer& rd, int factor, int variant) {
  const Mat& M = rd.g.g[factor];
  int two_m = M.rows();
  if (two_m == 2) {
    Rat p = M.at(1, 0);
    if (p == 0) throw std::logic_error("degenerate pair: zero pivot");
    Rat c = -M.at(0, 0) / p;
    Mat C(1, 1);
    C.at(0, 0) = c;
    rd.left(factor, symplectic_type2(C));
    return;
  }
  Mat slice(two_m, 2);
  for (int i = 0; i < two_m; ++i) {
    slice.at(i, 0) = M.at(i, 0);
    slice.at(i, 1) = M.at(i, two_m - 1);
  }
  auto ur = lemma4_reduce(slice, variant);
  rd.left(factor, ur.first);
}

CanonicalResult finish(const CaseData& cd, Reducer& rd) {
  CanonicalResult res;
  res.g = rd.g;
  res.steps = std::move(rd.steps);
  for (const auto& t : case_templates(cd)) res.slices.push_back(template_slice(cd, t, res.g));
  return res;
}

CanonicalResult reduce34(const CaseData& cd, const GroupElement& g0) {
  int n = cd.params.n, m = cd.params.m;
  Reducer rd(cd, g0);
  Rat Delta = rd.val("Delta"), D = rd.val("D"), delta = rd.val("delta");

  rd.begin("corner normalization");
  {
    const Mat& P = rd.g.g[0];
    const Mat& Q = rd.g.g[1];
    Mat h(2, 2);
    h.at(0, 0) = P.at(n - 1, n - 1) / Delta;
    h.at(1, 0) = -P.at(n - 1, n - 2) / Delta;
    h.at(0, 1) = Delta * Q.at(2 * m - 1, 2 * m - 1) / D;
    h.at(1, 1) = -Delta * Q.at(2 * m - 1, 0) / D;
    Mat f0 = Mat::identity(n);
    f0.set_block(n - 2, n - 2, h);
    GroupElement he = GroupElement::identity(cd.shape);
    he.g[0] = f0;
    he.g[1] = embed_at(2 * m, {1, 2 * m}, h);
    rd.right(he);
  }
  rd.end();

  rd.begin("tail column clearing");
  {
    const Mat& M = rd.g.g[0];
    for (int i = 1; i <= n - 2; ++i) {
      Rat c = -M.at(i - 1, n - 2);
      Mat e = Mat::identity(n);
      e.at(i - 1, n - 2) = c;
      rd.left(0, e);
    }
    for (int i = 1; i <= n - 2; ++i) {
      Rat c = -M.at(i - 1, n - 1) / Delta;
      Mat e = Mat::identity(n);
      e.at(i - 1, n - 1) = c;
      rd.left(0, e);
    }
    Rat c = -M.at(n - 2, n - 1) / Delta;
    Mat e = Mat::identity(n);
    e.at(n - 2, n - 1) = c;
    rd.left(0, e);
  }
  rd.end();

  if (n >= 4) {
    rd.begin("interior block normalization");
    {
      const Mat& M = rd.g.g[0];
      Mat S = M.block(2, 0, n - 2, n - 2);
      Mat target = Mat::identity(n - 2);
      target.at(n - 3, n - 3) = delta;
      Mat A = S.inverse() * target;
      if (A.det() != 1) throw std::logic_error("interior normalizer leaves the subgroup");
      Mat f0 = Mat::identity(n);
      f0.set_block(0, 0, A);
      rd.right_factor(0, f0);
    }
    rd.end();

    rd.begin("head clearing");
    {
      const Mat& M = rd.g.g[0];
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= n - 4; ++j) {
          Rat c = -M.at(i - 1, j - 1);
          Mat e = Mat::identity(n);
          e.at(i - 1, j + 1) = c;
          rd.left(0, e);
        }
      Rat piv = M.at(1, n - 4);
      if (piv == 0) throw std::logic_error("head clearing pivot vanishes");
      Rat c = -M.at(0, n - 4) / piv;
      Mat e = Mat::identity(n);
      e.at(0, 1) = c;
      rd.left(0, e);
    }
    rd.end();
  }

  rd.begin("second factor pair reduction");
  sp_pair_tail(rd, 1, 1);
  rd.end();

  return finish(cd, rd);
}

CanonicalResult reduce5(const CaseData& cd, const GroupElement& g0) {
  int n = cd.params.n, m = cd.params.m;
  int N = 2 * n, M2 = 2 * m;
  Reducer rd(cd, g0);
  Rat Delta = rd.val("Delta");
  Rat D = rd.val("D");

  rd.begin("corner normalization");
  {
    const Mat& P = rd.g.g[0];
    const Mat& Q = rd.g.g[1];
    Mat h(2, 2);
    h.at(0, 0) = P.at(N - 1, N - 1) / Delta;
    h.at(1, 0) = -P.at(N - 1, 0) / Delta;
    h.at(0, 1) = Delta * Q.at(M2 - 1, M2 - 1) / D;
    h.at(1, 1) = -Delta * Q.at(M2 - 1, 0) / D;
    GroupElement he = GroupElement::identity(cd.shape);
    he.g[0] = embed_at(N, {1, N}, h);
    he.g[1] = embed_at(M2, {1, M2}, h);
    rd.right(he);
  }
  rd.end();

  rd.begin("first factor clearing");
  sp_pair_clear(rd, 0, Delta);
  rd.end();

  rd.begin("second factor pair reduction");
  sp_pair_tail(rd, 1, 1);
  rd.end();

  return finish(cd, rd);
}

CanonicalResult reduce6(const CaseData& cd, const GroupElement& g0) {
  int n = cd.params.n;
  int N = 2 * n;
  std::vector<int> sc{1, 2, N - 1, N};
  Reducer rd(cd, g0);

  auto slice_at = [&](int i, int k) {  // 1-based row / pair column 1..4
    return rd.g.g[0].at(i - 1, sc[k - 1] - 1);
  };

  rd.begin("second factor absorption");
  {
    Mat qinv = rd.g.g[1].inverse();
    GroupElement he;
    he.g.push_back(embed_at(N, sc, qinv));
    he.g.push_back(qinv);
    rd.right(he);
  }
  rd.end();

  rd.begin("bottom echelon");
  for (int j = N - 1; j >= n + 1; --j) {
    int kmax = std::min(N - j, 4);
    for (int k = 1; k <= kmax; ++k) {
      int s = N + 1 - k;
      Rat piv = slice_at(s, k);
      if (piv == 0) throw std::logic_error("echelon pivot vanishes");
      Rat c = -slice_at(j, k) / piv;
      Mat V = Mat::identity(n);
      V.at(n - (s - n), n - (j - n)) = -c;
      rd.left(0, symplectic_type1(V));
    }
  }
  rd.end();

  rd.begin("column shear 1");
  {
    Rat v = -slice_at(N, 2) / slice_at(N, 1);
    Mat V2 = Mat::identity(2);
    V2.at(0, 1) = v;
    Mat u4 = symplectic_type1(V2);
    rd.left(1, u4.inverse());
    GroupElement he;
    he.g.push_back(embed_at(N, sc, u4));
    he.g.push_back(u4);
    rd.right(he);
  }
  rd.end();

  rd.begin("column shear 2");
  {
    Rat d1 = slice_at(N, 1);
    Rat x = -slice_at(N, 3) / d1;
    Rat y = -slice_at(N, 4) / d1;
    Rat z = -slice_at(N - 1, 3) / slice_at(N - 1, 2);
    Mat C2(2, 2);
    C2.at(0, 0) = x;
    C2.at(0, 1) = y;
    C2.at(1, 0) = z;
    C2.at(1, 1) = x;
    Mat u4 = symplectic_type2(C2);
    rd.left(1, u4.inverse());
    GroupElement he;
    he.g.push_back(embed_at(N, sc, u4));
    he.g.push_back(u4);
    rd.right(he);
  }
  rd.end();

  rd.begin("top clearing");
  for (int i = n; i >= 1; --i) {
    int kmax = std::min(std::min(i, 4), n);
    for (int k = 1; k <= kmax; ++k) {
      int s = N + 1 - k;
      Rat piv = slice_at(s, k);
      if (piv == 0) throw std::logic_error("top clearing pivot vanishes");
      Rat c = -slice_at(i, k) / piv;
      Mat C(n, n);
      C.at(i - 1, n - k) = c;
      C.at(k - 1, n - i) = c;
      rd.left(0, symplectic_type2(C));
    }
  }
  rd.end();

  return finish(cd, rd);
}

CanonicalResult reduce7(const CaseData& cd, const GroupElement& g0) {
  int n = cd.params.n, m = cd.params.m, l = cd.params.l;
  int N = 2 * n, M2 = 2 * m, L2 = 2 * l;
  Reducer rd(cd, g0);
  Rat D1 = rd.val("Delta_1");
  Rat Dp = rd.val("D_1");

  rd.begin("corner normalization");
  {
    const Mat& P = rd.g.g[0];
    const Mat& Q = rd.g.g[1];
    Mat h(2, 2);
    h.at(0, 0) = P.at(N - 1, N - 1) / D1;
    h.at(1, 0) = -P.at(N - 1, 0) / D1;
    h.at(0, 1) = D1 * Q.at(M2 - 1, M2 - 1) / Dp;
    h.at(1, 1) = -D1 * Q.at(M2 - 1, 0) / Dp;
    GroupElement he;
    he.g.push_back(embed_at(N, {1, N}, h));
    he.g.push_back(embed_at(M2, {1, M2}, h));
    he.g.push_back(embed_at(L2, {1, L2}, h));
    rd.right(he);
  }
  rd.end();

  rd.begin("first factor clearing");
  sp_pair_clear(rd, 0, D1);
  rd.end();

  rd.begin("second factor pair reduction");
  sp_pair_tail(rd, 1, 1);
  rd.end();

  rd.begin("third factor pair reduction");
  sp_pair_tail(rd, 2, 1);
  rd.end();

  return finish(cd, rd);
}

CanonicalResult reduce8(const CaseData& cd, const GroupElement& g0) {
  int n = cd.params.n, m = cd.params.m;
  int N = 2 * n, M2 = 2 * m;
  Reducer rd(cd, g0);
  Rat D1 = rd.val("Delta_1"), D2 = rd.val("Delta_2");
  Rat d1 = rd.val("delta_1"), d2 = rd.val("delta_2");
  Rat Dv = rd.val("Delta");

  rd.begin("corner normalization");
  {
    const Mat& P = rd.g.g[0];
    const Mat& Q = rd.g.g[1];
    const Mat& R = rd.g.g[2];
    Mat h2(2, 2), h3(2, 2);
    h2.at(0, 0) = Q.at(3, 3) / D1;
    h2.at(1, 0) = -Q.at(3, 0) / D1;
    h2.at(0, 1) = -D1 * P.at(N - 1, N - 1) / d1;
    h2.at(1, 1) = D1 * P.at(N - 1, 0) / d1;
    h3.at(0, 0) = Q.at(3, 2) / D2;
    h3.at(1, 0) = -Q.at(3, 1) / D2;
    h3.at(0, 1) = -D2 * R.at(M2 - 1, M2 - 1) / d2;
    h3.at(1, 1) = D2 * R.at(M2 - 1, 0) / d2;
    GroupElement he;
    he.g.push_back(embed_at(N, {1, N}, h2));
    he.g.push_back(embed_at(4, {1, 4}, h2) * embed_at(4, {2, 3}, h3));
    he.g.push_back(embed_at(M2, {1, M2}, h3));
    rd.right(he);
  }
  rd.end();

  rd.begin("first factor pair reduction");
  sp_pair_tail(rd, 0, 1);
  rd.end();

  rd.begin("third factor pair reduction");
  sp_pair_tail(rd, 2, 1);
  rd.end();

  rd.begin("middle factor row shear");
  {
    const Mat& Q = rd.g.g[1];
    Rat v = Q.at(2, 2) / Q.at(3, 2);
    Mat V = Mat::identity(2);
    V.at(0, 1) = v;
    rd.left(1, symplectic_type1(V));
  }
  rd.end();

  rd.begin("middle factor final clearing");
  {
    const Mat& Q = rd.g.g[1];
    Rat z = -Q.at(1, 0);
    Rat x = -(Rat(1) + Q.at(1, 2)) / D2;
    Rat target = Dv / (d1 * d2);
    Rat y = (target - Q.at(0, 2) - x * Q.at(2, 2)) / D2;
    Mat C(2, 2);
    C.at(0, 0) = x;
    C.at(0, 1) = y;
    C.at(1, 0) = z;
    C.at(1, 1) = x;
    rd.left(1, symplectic_type2(C));
  }
  rd.end();

  return finish(cd, rd);
}

}  // namespace

std::pair<Mat, Mat> lemma4_reduce(const Mat& pin, int variant) {
  if (variant != 1 && variant != 2) throw std::invalid_argument("variant must be 1 or 2");
  if (pin.cols() != 2 || pin.rows() < 4 || pin.rows() % 2 != 0)
    throw std::invalid_argument("need a 2m x 2 slice with m >= 2");
  int two_m = pin.rows(), m = two_m / 2;
  Rat p = pin.at(two_m - 1, 0);
  if (p == 0) throw std::domain_error("bottom left entry vanishes");
  Rat p2 = pin.at(two_m - 1, 1);
  Rat dlem = pin.at(two_m - 2, 0) * p2 - pin.at(two_m - 2, 1) * p;
  if (dlem == 0) throw std::domain_error("trailing 2x2 minor vanishes");
  Rat pair(0);
  for (int i = 0; i < m; ++i) {
    Rat t = pin.at(i, 0) * pin.at(two_m - 1 - i, 1) - pin.at(i, 1) * pin.at(two_m - 1 - i, 0);
    pair += t;
  }
  if (pair != 1) throw std::domain_error("columns do not pair to 1");

  Mat cur = pin;
  Mat W = Mat::identity(m);
  auto bottom_op = [&](int dst, int src, const Rat& c) {  // 1-based bottom rows
    for (int j = 0; j < 2; ++j) {
      Rat v = cur.at(m + dst - 1, j) + c * cur.at(m + src - 1, j);
      cur.at(m + dst - 1, j) = v;
    }
    Mat we = Mat::identity(m);
    we.at(dst - 1, src - 1) = c;
    W = we * W;
  };
  {
    Rat c = -cur.at(two_m - 2, 0) / p;
    bottom_op(m - 1, m, c);
  }
  for (int bi = m - 2; bi >= 1; --bi) {
    Rat c1 = -cur.at(m + bi - 1, 0) / p;
    bottom_op(bi, m, c1);
    Rat piv = cur.at(two_m - 2, 1);  // now -dlem/p
    Rat c2 = -cur.at(m + bi - 1, 1) / piv;
    bottom_op(bi, m - 1, c2);
  }
  Mat M1 = symplectic_type1(W.antitranspose().inverse());
  Mat half = M1 * pin;

  Mat C(m, m);
  auto setC = [&](int i, int j, const Rat& v) {  // 1-based with antidiagonal tie
    C.at(i - 1, j - 1) = v;
    C.at(m - j, m - i) = v;
  };
  for (int i = 3; i <= m; ++i) {
    Rat t1 = half.at(i - 1, 0), t2 = half.at(i - 1, 1);
    Rat cim = -t1 / p;
    Rat cim1 = (t2 + cim * p2) * p / dlem;
    setC(i, m, cim);
    setC(i, m - 1, cim1);
  }
  Rat t11 = half.at(0, 0), t12 = half.at(0, 1);
  Rat t21 = half.at(1, 0), t22 = half.at(1, 1);
  Rat c1(0), c2(0), c3(0);
  c2 = -t11 / p;
  if (variant == 1) {
    c1 = -t21 / p;
    c3 = (t22 + c1 * p2) * p / dlem;
  } else {
    c1 = (t12 + c2 * p2) * p / dlem;
    c3 = (t22 + c1 * p2) * p / dlem;
  }
  setC(1, m - 1, c1);
  setC(1, m, c2);
  setC(2, m - 1, c3);
  Mat u = symplectic_type2(C) * M1;
  Mat red = u * pin;

  Rat forced = (variant == 1) ? red.at(0, 1) : red.at(1, 0);
  Rat want = (variant == 1) ? -Rat(1) / p : -p / dlem;
  if (forced != want) throw std::logic_error("entry forced by the pairing has the wrong value");
  return {u, red};
}

Rat monomial_value(const CaseData& cd, const Monomial& mono, const GroupElement& g) {
  Rat v = mono.coeff;
  for (const auto& pw : mono.powers) {
    Rat f = evaluate_function(cd, pw.first, g);
    Rat fe = rat_pow(f, pw.second);
    v = v * fe;
  }
  return v;
}

std::string monomial_to_string(const Monomial& mono) {
  std::string num, den;
  for (const auto& pw : mono.powers) {
    std::string& dst = pw.second > 0 ? num : den;
    for (int i = 0; i < std::abs(pw.second); ++i) {
      if (!dst.empty()) dst += "*";
      dst += pw.first;
    }
  }
  if (num.empty()) {
    num = to_string(mono.coeff);
  } else if (mono.coeff == Rat(-1)) {
    num = "-" + num;
  } else if (mono.coeff != Rat(1)) {
    num = to_string(mono.coeff) + "*" + num;
  }
  std::string s = num;
  if (!den.empty()) {
    if (den.find('*') != std::string::npos) den = "(" + den + ")";
    s += "/" + den;
  }
  return s;
}

std::vector<SliceTemplate> case_templates(const CaseData& cd) {
  auto mk = [&cd](long coeff, std::initializer_list<std::pair<const char*, int>> pw) {
    Monomial mo;
    mo.coeff = Rat(coeff);
    for (const auto& pe : pw)
      if (has_function(cd, pe.first)) mo.powers.push_back({pe.first, pe.second});
    return mo;
  };
  int n = cd.params.n, m = cd.params.m, l = cd.params.l;
  std::vector<SliceTemplate> out;
  auto pair_slice = [](const std::string& label, int factor, int size) {
    SliceTemplate t;
    t.label = label;
    t.factor = factor;
    t.rows = size;
    t.cols = 2;
    t.col_index = {1, size};
    return t;
  };

  switch (cd.id) {
    case 3:
    case 4: {
      SliceTemplate tp;
      tp.label = "first factor";
      tp.rows = n;
      tp.cols = n;
      if (n >= 4) {
        tp.entries.push_back({1, n - 2, mk(-1, {{"delta", 1}, {"Phi1", -1}})});
        tp.entries.push_back({2, n - 3, mk(1, {{"Phi1", 1}, {"Delta", -1}, {"delta", -1}})});
        tp.entries.push_back({2, n - 2, mk(1, {{"Phi2", 1}, {"D", -1}})});
        for (int i = 3; i <= n - 1; ++i) tp.entries.push_back({i, i - 2, mk(1, {})});
        tp.entries.push_back({n, n - 2, mk(1, {{"delta", 1}})});
        tp.entries.push_back({n - 1, n - 1, mk(1, {})});
        tp.entries.push_back({n, n, mk(1, {{"Delta", 1}})});
      } else {
        tp.entries.push_back({1, 1, mk(1, {{"Delta", -1}})});
        tp.entries.push_back({2, 1, mk(1, {{"Phi2", 1}, {"D", -1}})});
        tp.entries.push_back({2, 2, mk(1, {})});
        tp.entries.push_back({3, 1, mk(1, {{"delta", 1}})});
        tp.entries.push_back({3, 3, mk(1, {{"Delta", 1}})});
      }
      out.push_back(tp);
      SliceTemplate tq = pair_slice("second factor pair", 1, 2 * m);
      tq.entries.push_back({1, 2, mk(1, {{"Delta", 1}, {"D", -1}})});
      if (m >= 2) {
        tq.entries.push_back({2 * m - 1, 2, mk(1, {{"W", 1}, {"Delta", 1}, {"D", -1}})});
        tq.entries.push_back({2 * m, 1, mk(-1, {{"D", 1}, {"Delta", -1}})});
      } else {
        tq.entries.push_back({2, 1, mk(-1, {{"D", 1}, {"Delta", -1}})});
      }
      out.push_back(tq);
      break;
    }
    case 5: {
      SliceTemplate tp = pair_slice("first factor pair", 0, 2 * n);
      if (n >= 2) {
        tp.entries.push_back({2, 2, mk(-1, {})});
        tp.entries.push_back({2 * n - 1, 1, mk(1, {})});
        tp.entries.push_back({2 * n, 2, mk(1, {{"Delta", 1}})});
      } else {
        tp.entries.push_back({1, 1, mk(1, {})});
        tp.entries.push_back({2, 2, mk(1, {})});
      }
      out.push_back(tp);
      SliceTemplate tq = pair_slice("second factor pair", 1, 2 * m);
      tq.entries.push_back({1, 2, mk(1, {{"Delta", 1}, {"D", -1}})});
      if (m >= 2) {
        tq.entries.push_back({2 * m - 1, 2, mk(1, {{"delta", 1}, {"Delta", 1}, {"D", -1}})});
        tq.entries.push_back({2 * m, 1, mk(-1, {{"D", 1}, {"Delta", -1}})});
      } else {
        tq.entries.push_back({2, 1, mk(-1, {{"D", 1}, {"Delta", -1}})});
      }
      out.push_back(tq);
      break;
    }
    case 6: {
      SliceTemplate t;
      t.label = "orbit pair columns";
      t.orbit_matrix = true;
      t.rows = 2 * n;
      t.cols = 4;
      t.col_index = {1, 2, 2 * n - 1, 2 * n};
      t.entries.push_back({1, 4, mk(-1, {{"Delta_1", -1}})});
      t.entries.push_back({2, 3, mk(1, {{"Delta_1", 1}, {"Delta_2", -1}})});
      if (n >= 4) {
        t.entries.push_back({3, 4, mk(1, {{"D", 1}, {"Delta_3", -1}})});
        t.entries.push_back({2 * n - 3, 4, mk(-1, {{"Delta_4", 1}, {"Delta_3", -1}})});
      } else {
        t.entries.push_back({3, 4, mk(1, {{"D", 1}, {"Delta_3", -1}})});
      }
      t.entries.push_back({2 * n - 2, 3, mk(1, {{"Delta_3", 1}, {"Delta_2", -1}})});
      t.entries.push_back({2 * n - 2, 4, mk(1, {{"F", 1}, {"Delta_1", -1}, {"Delta_2", -1}})});
      t.entries.push_back({2 * n - 1, 2, mk(-1, {{"Delta_2", 1}, {"Delta_1", -1}})});
      t.entries.push_back({2 * n - 1, 4, mk(1, {{"D", 1}, {"Delta_1", -1}})});
      t.entries.push_back({2 * n, 1, mk(1, {{"Delta_1", 1}})});
      out.push_back(t);
      break;
    }
    case 7: {
      SliceTemplate tp = pair_slice("first factor pair", 0, 2 * n);
      if (n >= 2) {
        tp.entries.push_back({2, 2, mk(-1, {})});
        tp.entries.push_back({2 * n - 1, 1, mk(1, {})});
        tp.entries.push_back({2 * n, 2, mk(1, {{"Delta_1", 1}})});
      } else {
        tp.entries.push_back({1, 1, mk(1, {})});
        tp.entries.push_back({2, 2, mk(1, {})});
      }
      out.push_back(tp);
      SliceTemplate tq = pair_slice("second factor pair", 1, 2 * m);
      tq.entries.push_back({1, 2, mk(1, {{"Delta_1", 1}, {"D_1", -1}})});
      if (m >= 2) {
        tq.entries.push_back({2 * m - 1, 2, mk(1, {{"Delta_2", 1}, {"Delta_1", 1}, {"D_1", -1}})});
        tq.entries.push_back({2 * m, 1, mk(-1, {{"D_1", 1}, {"Delta_1", -1}})});
      } else {
        tq.entries.push_back({2, 1, mk(-1, {{"D_1", 1}, {"Delta_1", -1}})});
      }
      out.push_back(tq);
      SliceTemplate tr = pair_slice("third factor pair", 2, 2 * l);
      tr.entries.push_back({1, 2, mk(1, {{"Delta_1", 1}, {"D_3", -1}})});
      if (l >= 2) {
        tr.entries.push_back({2 * l - 1, 2, mk(1, {{"Delta_1", 1}, {"Delta_3", 1}, {"D_3", -1}})});
        tr.entries.push_back({2 * l, 1, mk(-1, {{"D_3", 1}, {"Delta_1", -1}})});
        tr.entries.push_back({2 * l, 2, mk(-1, {{"D_2", 1}, {"Delta_1", 1}, {"D_1", -1}})});
      } else {
        tr.entries.push_back({2, 1, mk(-1, {{"D_3", 1}, {"Delta_1", -1}})});
        tr.entries.push_back({2, 2, mk(-1, {{"D_2", 1}, {"Delta_1", 1}, {"D_1", -1}})});
      }
      out.push_back(tr);
      break;
    }
    case 8: {
      SliceTemplate tp = pair_slice("first factor pair", 0, 2 * n);
      tp.entries.push_back({1, 2, mk(-1, {{"Delta_1", 1}, {"delta_1", -1}})});
      if (n >= 2) {
        tp.entries.push_back({2 * n - 1, 2, mk(-1, {{"D_1", 1}, {"Delta_1", 1}, {"delta_1", -1}})});
        tp.entries.push_back({2 * n, 1, mk(1, {{"delta_1", 1}, {"Delta_1", -1}})});
      } else {
        tp.entries.push_back({2, 1, mk(1, {{"delta_1", 1}, {"Delta_1", -1}})});
      }
      out.push_back(tp);
      SliceTemplate tq;
      tq.label = "middle factor";
      tq.factor = 1;
      tq.rows = 4;
      tq.cols = 4;
      tq.entries.push_back({1, 1, mk(1, {{"Delta_1", -1}})});
      tq.entries.push_back({1, 3, mk(1, {{"Delta", 1}, {"delta_1", -1}, {"delta_2", -1}})});
      tq.entries.push_back({2, 3, mk(-1, {})});
      tq.entries.push_back({3, 1, mk(1, {})});
      tq.entries.push_back({3, 2, mk(1, {})});
      tq.entries.push_back(
          {3, 4, mk(1, {{"Delta_1", 1}, {"Delta", 1}, {"delta_1", -1}, {"delta_2", -1}})});
      tq.entries.push_back({4, 3, mk(1, {{"Delta_2", 1}})});
      tq.entries.push_back({4, 4, mk(1, {{"Delta_1", 1}})});
      out.push_back(tq);
      SliceTemplate tr = pair_slice("third factor pair", 2, 2 * m);
      tr.entries.push_back({1, 2, mk(-1, {{"Delta_2", 1}, {"delta_2", -1}})});
      if (m >= 2) {
        tr.entries.push_back({2 * m - 1, 2, mk(-1, {{"D_2", 1}, {"Delta_2", 1}, {"delta_2", -1}})});
        tr.entries.push_back({2 * m, 1, mk(1, {{"delta_2", 1}, {"Delta_2", -1}})});
      } else {
        tr.entries.push_back({2, 1, mk(1, {{"delta_2", 1}, {"Delta_2", -1}})});
      }
      out.push_back(tr);
      break;
    }
    default:
      throw std::invalid_argument("no canonical slice form for this case");
  }
  return out;
}

Mat template_slice(const CaseData& cd, const SliceTemplate& t, const GroupElement& g) {
  Mat src = t.orbit_matrix ? case_r_matrix(cd, g) : g.g[t.factor];
  if (t.col_index.empty()) return src;
  Mat out(src.rows(), (int)t.col_index.size());
  for (int i = 0; i < src.rows(); ++i)
    for (size_t j = 0; j < t.col_index.size(); ++j) out.at(i, (int)j) = src.at(i, t.col_index[j] - 1);
  return out;
}

CanonicalResult reduce_to_canonical(const CaseData& cd, const GroupElement& g) {
  switch (cd.id) {
    case 3:
    case 4:
      return reduce34(cd, g);
    case 5:
      return reduce5(cd, g);
    case 6:
      return reduce6(cd, g);
    case 7:
      return reduce7(cd, g);
    case 8:
      return reduce8(cd, g);
    default:
      throw std::invalid_argument("canonical reduction exists only for the matrix cases");
  }
}

CheckResult reconstruct_check(const CaseData& cd, const GroupElement& g, const CanonicalResult& res) {
  CheckResult r;
  std::vector<SliceTemplate> ts = case_templates(cd);
  if (ts.size() != res.slices.size()) {
    r.ok = false;
    r.detail = "slice count mismatch";
    return r;
  }
  for (size_t s = 0; s < ts.size(); ++s) {
    const SliceTemplate& t = ts[s];
    Mat expect(t.rows, (int)(t.col_index.empty() ? t.cols : t.col_index.size()));
    for (const auto& e : t.entries) {
      Rat v = monomial_value(cd, e.value, g);
      expect.at(e.row - 1, e.col - 1) = v;
    }
    if (expect != res.slices[s]) {
      r.ok = false;
      r.detail = t.label + ": slice disagrees with its template";
      return r;
    }
  }
  return r;
}

CheckResult transcript_check(const CaseData& cd, const GroupElement& g, const CanonicalResult& res) {
  CheckResult r;
  std::vector<Rat> base;
  for (const auto& f : cd.functions) base.push_back(f.eval(g));
  GroupElement cur = g;
  for (const auto& st : res.steps) {
    for (size_t k = 0; k < cd.shape.size(); ++k) {
      if (!st.left_u.g[k].is_upper_unitriangular()) {
        r.ok = false;
        r.detail = st.label + ": left multiplier is not upper unitriangular";
        return r;
      }
      if (!check_invariant_form(st.left_u.g[k], cd.shape[k]) ||
          !check_invariant_form(st.right_h.g[k], cd.shape[k])) {
        r.ok = false;
        r.detail = st.label + ": multiplier leaves the group";
        return r;
      }
    }
    cur = st.left_u * cur * st.right_h;
    for (size_t i = 0; i < cd.functions.size(); ++i) {
      Rat v = cd.functions[i].eval(cur);
      if (v != base[i]) {
        r.ok = false;
        r.detail = st.label + ": " + cd.functions[i].name + " drifts";
        return r;
      }
    }
  }
  if (!(cur == res.g)) {
    r.ok = false;
    r.detail = "replayed transcript misses the recorded tuple";
    return r;
  }
  return r;
}

}  // namespace ews
