#include "ews/cases.hpp"

#include <stdexcept>

namespace ews {

namespace {

Rat ent(const GroupElement& g, int f, int i, int j) {
  return g.g[f].at(i - 1, j - 1);
}

// (-1)^{i+j} times the minor with row i, column j removed; the (j,i) entry of
// the inverse for det-1 matrices.
Rat cofactor(const Mat& p, int i, int j) {
  std::vector<int> rows, cols;
  for (int r = 1; r <= p.rows(); ++r)
    if (r != i) rows.push_back(r);
  for (int c = 1; c <= p.cols(); ++c)
    if (c != j) cols.push_back(c);
  Rat m = p.minor_det(rows, cols);
  return ((i + j) % 2 == 0) ? m : -m;
}

std::vector<int> seq1(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::vector<int> last_rows(int total, int count) { return seq1(total - count + 1, total); }

// Columns (j, 1, 2, ..., i-1) in that order; the leading index carries the
// sign convention of the catalog.
std::vector<int> cols_with_lead(int j, int i) {
  std::vector<int> v{j};
  for (int c = 1; c <= i - 1; ++c) v.push_back(c);
  return v;
}

Weight fund(const GroupShape& shape, int factor, int idx) {
  Weight w = Weight::zero(shape);
  w.c[factor][idx - 1] = 1;
  return w;
}

ExtendedWeight ew(const Weight& w, long chi = 0) { return ExtendedWeight{w, Int(chi)}; }

Mat sl_corner_embed(int n, const Mat& s) {
  Mat f = Mat::identity(n);
  f.set_block(n - 2, n - 2, s);
  return f;
}

// 2x2 corner determinant p_{N-1,1} p_{N,N} - p_{N-1,N} p_{N,1} of the given
// factor, N its size.
Rat corner_det(const Mat& p) {
  int nn = p.rows();
  Rat v = p.at(nn - 2, 0) * p.at(nn - 1, nn - 1) - p.at(nn - 2, nn - 1) * p.at(nn - 1, 0);
  return v;
}

// p_{N,1} q_{M,M} - p_{N,N} q_{M,1}: pairing of the two bottom corner rows.
Rat corner_pair(const Mat& p, const Mat& q) {
  int np = p.rows(), nq = q.rows();
  Rat v = p.at(np - 1, 0) * q.at(nq - 1, nq - 1) - p.at(np - 1, np - 1) * q.at(nq - 1, 0);
  return v;
}

CaseData make_case1(const CaseParams& pr) {
  int n = pr.n;
  CaseData cd;
  cd.id = 1;
  cd.description = "SL(n) x SL(n+1) over the diagonal SL(n) extended by a torus";
  cd.shape = {FactorType::sl(n), FactorType::sl(n + 1)};
  cd.params = pr;

  auto r_of = [n](const GroupElement& g) {
    Mat ptil = Mat::identity(n + 1);
    ptil.set_block(0, 0, g.g[0]);
    return g.g[1] * ptil.inverse();
  };

  for (int i = 1; i <= n; ++i) {
    Weight w = fund(cd.shape, 1, n + 1 - i);
    if (i < n) w = w + fund(cd.shape, 0, i);
    cd.functions.push_back(
        {"Delta_" + std::to_string(i), ew(w, i), [r_of, n, i](const GroupElement& g) {
           Mat r = r_of(g);
           return r.minor_det(last_rows(n + 1, i), seq1(1, i));
         }});
  }
  for (int i = 1; i <= n; ++i) {
    Weight w = fund(cd.shape, 1, n + 1 - i);
    if (i > 1) w = w + fund(cd.shape, 0, i - 1);
    cd.functions.push_back(
        {"delta_" + std::to_string(i), ew(w, -(n + 1 - i)), [r_of, n, i](const GroupElement& g) {
           Mat r = r_of(g);
           return r.minor_det(last_rows(n + 1, i), cols_with_lead(n + 1, i));
         }});
  }
  for (const auto& f : cd.functions) {
    cd.m_set.push_back(f.name);
    cd.table_generators.push_back(f.weight);
  }

  cd.sample_h = [n](Rng& rng, bool h0_only) {
    Mat p0 = random_element(FactorType::sl(n), rng, 2 * n);
    Rat t = h0_only ? Rat(1) : rng.rat_param();
    Mat f2 = Mat::identity(n + 1);
    Mat top = p0.scaled(t);
    f2.set_block(0, 0, top);
    f2.at(n, n) = rat_pow(t, -long(n));
    return SubgroupSample{GroupElement{{p0, f2}}, t};
  };
  return cd;
}

CaseData make_case2(const CaseParams& pr) {
  int n = pr.n;
  int k = n / 2;
  bool even = (n % 2 == 0);
  CaseData cd;
  cd.id = 2;
  cd.description = "SO(n) x SO(n+1) over the diagonal SO(n)";
  cd.shape = {FactorType::so(n), FactorType::so(n + 1)};
  cd.params = pr;

  auto r_of = [n](const GroupElement& g) { return g.g[1] * so_step_embed(g.g[0]).inverse(); };
  auto two = [](const Weight& w) { return w + w; };

  for (int i = 1; i <= k; ++i) {
    Weight w;
    if (even) {
      if (i <= k - 2)
        w = fund(cd.shape, 0, i) + fund(cd.shape, 1, i);
      else if (i == k - 1)
        w = fund(cd.shape, 0, k - 1) + fund(cd.shape, 0, k) + fund(cd.shape, 1, k - 1);
      else
        w = two(fund(cd.shape, 0, k) + fund(cd.shape, 1, k));
    } else {
      if (i <= k - 1)
        w = fund(cd.shape, 0, i) + fund(cd.shape, 1, i);
      else
        w = two(fund(cd.shape, 0, k)) + fund(cd.shape, 1, k) + fund(cd.shape, 1, k + 1);
    }
    cd.functions.push_back({"Delta_" + std::to_string(i), ew(w), [r_of, n, i](const GroupElement& g) {
                              Mat r = r_of(g);
                              return r.minor_det(last_rows(n + 1, i), seq1(1, i));
                            }});
  }
  int dmax = even ? k : k + 1;
  for (int i = 1; i <= dmax; ++i) {
    Weight w;
    if (even) {
      if (i <= k - 1) {
        w = fund(cd.shape, 1, i);
        if (i > 1) w = w + fund(cd.shape, 0, i - 1);
      } else {
        w = fund(cd.shape, 0, k - 1) + fund(cd.shape, 0, k) + two(fund(cd.shape, 1, k));
      }
    } else {
      if (i <= k - 1) {
        w = fund(cd.shape, 1, i);
        if (i > 1) w = w + fund(cd.shape, 0, i - 1);
      } else if (i == k) {
        w = fund(cd.shape, 1, k) + fund(cd.shape, 1, k + 1);
        if (k > 1) w = w + fund(cd.shape, 0, k - 1);
      } else {
        w = two(fund(cd.shape, 0, k) + fund(cd.shape, 1, k + 1));
      }
    }
    cd.functions.push_back(
        {"delta_" + std::to_string(i), ew(w), [r_of, n, k, even, i](const GroupElement& g) {
           Mat r = r_of(g);
           Rat v = r.minor_det(last_rows(n + 1, i), cols_with_lead(k + 1, i));
           if (!even) {
             Rat v2 = r.minor_det(last_rows(n + 1, i), cols_with_lead(k + 2, i));
             v = v - v2;
           }
           return v;
         }});
  }
  {
    Weight w = even ? two(fund(cd.shape, 0, k - 1) + fund(cd.shape, 1, k))
                    : two(fund(cd.shape, 0, k) + fund(cd.shape, 1, k));
    cd.functions.push_back({"Phi", ew(w), [r_of, n, k, even](const GroupElement& g) {
                              Mat r = r_of(g);
                              if (even) {
                                std::vector<int> cols = seq1(1, k - 1);
                                cols.push_back(k + 2);
                                return r.minor_det(last_rows(n + 1, k), cols);
                              }
                              std::vector<int> rows{k + 1};
                              for (int i = k + 3; i <= 2 * k + 2; ++i) rows.push_back(i);
                              std::vector<int> cols{(k % 2 == 0) ? k + 1 : k + 2};
                              for (int j = 1; j <= k; ++j) cols.push_back(j);
                              return r.minor_det(rows, cols);
                            }});
  }
  for (const auto& f : cd.functions) cd.m_set.push_back(f.name);

  if (even) {
    // delta_k^2 = -2 Delta_k Phi (n = 2k >= 4)
    const auto& dk = cd.functions[k + (k - 1)];
    Relation rel;
    rel.text = "delta_" + std::to_string(k) + "^2 = -2*Delta_" + std::to_string(k) + "*Phi";
    rel.lhs_weight = dk.weight + dk.weight;
    rel.rhs_weight = ew(cd.functions[k - 1].weight.w + cd.functions.back().weight.w);
    auto fd = dk.eval, fD = cd.functions[k - 1].eval, fP = cd.functions.back().eval;
    rel.sides = [fd, fD, fP](const GroupElement& g) {
      Rat l = fd(g);
      l = l * l;
      Rat r = fD(g) * fP(g);
      r = r * Rat(-2);
      return std::make_pair(l, r);
    };
    cd.relations.push_back(rel);
  } else {
    // Delta_k^2 = (-1)^{k+1} delta_{k+1} Phi (n = 2k+1)
    Relation rel;
    rel.text = "Delta_" + std::to_string(k) + "^2 = " + ((k % 2 == 0) ? "-" : "") + "delta_" +
               std::to_string(k + 1) + "*Phi";
    const auto& Dk = cd.functions[k - 1];
    const auto& dk1 = cd.functions[k + k];
    rel.lhs_weight = Dk.weight + Dk.weight;
    rel.rhs_weight = ew(dk1.weight.w + cd.functions.back().weight.w);
    auto fD = Dk.eval, fd = dk1.eval, fP = cd.functions.back().eval;
    int sign = (k % 2 == 0) ? -1 : 1;
    rel.sides = [fD, fd, fP, sign](const GroupElement& g) {
      Rat l = fD(g);
      l = l * l;
      Rat r = fd(g) * fP(g);
      r = r * Rat(sign);
      return std::make_pair(l, r);
    };
    cd.relations.push_back(rel);
  }

  auto push_gen = [&cd](const Weight& w) { cd.table_generators.push_back(ew(w)); };
  if (n == 3) {
    push_gen(fund(cd.shape, 1, 1) + fund(cd.shape, 1, 2));
    push_gen(fund(cd.shape, 0, 1) + fund(cd.shape, 1, 1));
    push_gen(fund(cd.shape, 0, 1) + fund(cd.shape, 1, 2));
  } else if (even) {
    for (int i = 1; i <= k - 1; ++i) {
      Weight w = fund(cd.shape, 1, i);
      if (i > 1) w = w + fund(cd.shape, 0, i - 1);
      push_gen(w);
    }
    for (int i = 1; i <= k - 2; ++i) push_gen(fund(cd.shape, 0, i) + fund(cd.shape, 1, i));
    push_gen(fund(cd.shape, 0, k - 1) + fund(cd.shape, 0, k) + fund(cd.shape, 1, k - 1));
    push_gen(fund(cd.shape, 0, k - 1) + fund(cd.shape, 1, k));
    push_gen(fund(cd.shape, 0, k) + fund(cd.shape, 1, k));
  } else {
    for (int i = 1; i <= k - 1; ++i) push_gen(fund(cd.shape, 0, i) + fund(cd.shape, 1, i));
    for (int i = 1; i <= k - 1; ++i) {
      Weight w = fund(cd.shape, 1, i);
      if (i > 1) w = w + fund(cd.shape, 0, i - 1);
      push_gen(w);
    }
    push_gen(fund(cd.shape, 0, k - 1) + fund(cd.shape, 1, k) + fund(cd.shape, 1, k + 1));
    push_gen(fund(cd.shape, 0, k) + fund(cd.shape, 1, k));
    push_gen(fund(cd.shape, 0, k) + fund(cd.shape, 1, k + 1));
  }

  cd.sample_h = [n](Rng& rng, bool) {
    Mat h = random_element(FactorType::so(n), rng, 2 * n);
    return SubgroupSample{GroupElement{{h, so_step_embed(h)}}, Rat(1)};
  };
  return cd;
}

// Cases 3 and 4 share everything except the torus factor of H and hence the
// character column, which case 4 zeroes out.
CaseData make_case34(int id, const CaseParams& pr) {
  int n = pr.n, m = pr.m;
  long cx = (id == 3) ? 1 : 0;
  CaseData cd;
  cd.id = id;
  cd.description = (id == 3)
                       ? "SL(n) x Sp(2m) over SL(n-2) x SL(2) x Sp(2m-2) extended by a torus"
                       : "SL(n) x Sp(2m) over SL(n-2) x SL(2) x Sp(2m-2)";
  cd.shape = {FactorType::sl(n), FactorType::sp(2 * m)};
  cd.params = pr;

  cd.functions.push_back({"Delta", ew(fund(cd.shape, 0, n - 2), 2 * cx),
                          [](const GroupElement& g) {
                            int nn = g.g[0].rows();
                            Rat v = g.g[0].at(nn - 2, nn - 2) * g.g[0].at(nn - 1, nn - 1) -
                                    g.g[0].at(nn - 2, nn - 1) * g.g[0].at(nn - 1, nn - 2);
                            return v;
                          }});
  if (m >= 2)
    cd.functions.push_back(
        {"W", ew(fund(cd.shape, 1, 2)), [](const GroupElement& g) { return corner_det(g.g[1]); }});
  cd.functions.push_back({"D", ew(fund(cd.shape, 0, n - 1) + fund(cd.shape, 1, 1), cx),
                          [](const GroupElement& g) {
                            const Mat& p = g.g[0];
                            const Mat& q = g.g[1];
                            int nn = p.rows(), mm = q.rows();
                            Rat v = p.at(nn - 1, nn - 2) * q.at(mm - 1, mm - 1) -
                                    p.at(nn - 1, nn - 1) * q.at(mm - 1, 0);
                            return v;
                          }});
  if (n >= 4)
    cd.functions.push_back({"Phi1", ew(fund(cd.shape, 0, 1) + fund(cd.shape, 0, n - 1)),
                            [n](const GroupElement& g) {
                              const Mat& p = g.g[0];
                              Rat v = p.at(n - 1, n - 2) * cofactor(p, 1, n - 1) +
                                      p.at(n - 1, n - 1) * cofactor(p, 1, n);
                              return v;
                            }});
  cd.functions.push_back({"Phi2", ew(fund(cd.shape, 0, 1) + fund(cd.shape, 1, 1), -cx),
                          [n](const GroupElement& g) {
                            const Mat& p = g.g[0];
                            const Mat& q = g.g[1];
                            int mm = q.rows();
                            Rat v = q.at(mm - 1, 0) * cofactor(p, 1, n - 1) +
                                    q.at(mm - 1, mm - 1) * cofactor(p, 1, n);
                            return v;
                          }});
  cd.functions.push_back({"delta", ew(fund(cd.shape, 0, 2), -2 * cx), [n](const GroupElement& g) {
                            return g.g[0].minor_det(seq1(3, n), seq1(1, n - 2));
                          }});

  cd.m_set = {"Delta", "D", "delta"};
  if (n >= 4) cd.m_set.push_back("Phi1");
  if (m >= 2) cd.m_set.push_back("W");

  if (n >= 4) {
    cd.lattice = {"Delta", "D", "Phi1", "delta"};
    cd.semigroup = {"Phi2"};
  } else {
    cd.lattice = {"Delta", "D"};
    cd.semigroup = {"delta", "Phi2"};
  }
  if (m >= 2) cd.semigroup.push_back("W");

  if (m == 1) {
    Relation rel;
    rel.text = "W = 1";
    rel.lhs_weight = ew(Weight::zero(cd.shape));
    rel.rhs_weight = rel.lhs_weight;
    rel.sides = [](const GroupElement& g) {
      return std::make_pair(corner_det(g.g[1]), Rat(1));
    };
    cd.relations.push_back(rel);
  }
  if (n == 3) {
    Relation rel;
    rel.text = "Phi1 = -delta*Delta";
    rel.lhs_weight = ew(fund(cd.shape, 0, 1) + fund(cd.shape, 0, 2));
    rel.rhs_weight = rel.lhs_weight;
    auto fdel = find_function(cd, "delta").eval;
    auto fDel = find_function(cd, "Delta").eval;
    rel.sides = [fdel, fDel](const GroupElement& g) {
      const Mat& p = g.g[0];
      Rat l = p.at(2, 1) * cofactor(p, 1, 2) + p.at(2, 2) * cofactor(p, 1, 3);
      Rat r = fdel(g) * fDel(g);
      r = -r;
      return std::make_pair(l, r);
    };
    cd.relations.push_back(rel);
  }

  if (id == 3 && n == 3) {
    Mat w1 = Mat::antidiag_ones(3).scaled(Rat(-1));
    cd.a2.push_back({"Phi2", "Delta", GroupElement{{w1, Mat::identity(2 * m)}}});
  }

  cd.central_sp = {{1, 1}};

  for (const auto& name : cd.lattice) cd.table_generators.push_back(find_function(cd, name).weight);
  for (const auto& name : cd.semigroup)
    cd.table_generators.push_back(find_function(cd, name).weight);

  bool with_torus = (id == 3);
  cd.sample_h = [n, m, with_torus](Rng& rng, bool h0_only) {
    Mat a = (n > 3) ? random_element(FactorType::sl(n - 2), rng, 2 * (n - 2)) : Mat::identity(n - 2);
    Mat s = random_element(FactorType::sl(2), rng, 4);
    Mat f1 = Mat::identity(n);
    f1.set_block(0, 0, a);
    f1.set_block(n - 2, n - 2, s);
    Rat chi0(1);
    if (with_torus && !h0_only) {
      Rat t = rng.rat_param();
      Rat head, tail;
      if (n % 2 == 1) {
        head = rat_pow(t, -2);
        tail = rat_pow(t, n - 2);
      } else {
        head = rat_pow(t, -1);
        tail = rat_pow(t, (n - 2) / 2);
      }
      chi0 = tail;
      for (int j = 0; j < n; ++j) {
        Rat sc = (j < n - 2) ? head : tail;
        for (int i = 0; i < n; ++i) f1.at(i, j) = f1.at(i, j) * sc;
      }
    }
    Mat f2 = embed_at(2 * m, {1, 2 * m}, s);
    if (m >= 2) {
      Mat c = random_element(FactorType::sp(2 * m - 2), rng, 4 * (m - 1));
      f2 = f2 * central_sp_embed(2 * m, c);
    }
    return SubgroupSample{GroupElement{{f1, f2}}, chi0};
  };
  return cd;
}

CaseData make_case5(const CaseParams& pr) {
  int n = pr.n, m = pr.m;
  CaseData cd;
  cd.id = 5;
  cd.description = "Sp(2n) x Sp(2m) over Sp(2n-2) x Sp(2) x Sp(2m-2)";
  cd.shape = {FactorType::sp(2 * n), FactorType::sp(2 * m)};
  cd.params = pr;

  if (n >= 2)
    cd.functions.push_back({"Delta", ew(fund(cd.shape, 0, 2)),
                            [](const GroupElement& g) { return corner_det(g.g[0]); }});
  if (m >= 2)
    cd.functions.push_back({"delta", ew(fund(cd.shape, 1, 2)),
                            [](const GroupElement& g) { return corner_det(g.g[1]); }});
  cd.functions.push_back({"D", ew(fund(cd.shape, 0, 1) + fund(cd.shape, 1, 1)),
                          [](const GroupElement& g) { return corner_pair(g.g[0], g.g[1]); }});

  cd.m_set = {"D"};
  if (n >= 2) {
    cd.m_set.push_back("Delta");
    cd.lattice.push_back("Delta");
  }
  cd.lattice.push_back("D");
  if (m >= 2) {
    cd.m_set.push_back("delta");
    cd.semigroup.push_back("delta");
  }

  auto const_rel = [&cd](const std::string& text, int factor) {
    Relation rel;
    rel.text = text;
    rel.lhs_weight = ew(Weight::zero(cd.shape));
    rel.rhs_weight = rel.lhs_weight;
    rel.sides = [factor](const GroupElement& g) {
      return std::make_pair(corner_det(g.g[factor]), Rat(1));
    };
    return rel;
  };
  if (n == 1) cd.relations.push_back(const_rel("Delta = 1", 0));
  if (m == 1) cd.relations.push_back(const_rel("delta = 1", 1));

  cd.central_sp = {{0, 1}, {1, 1}};

  for (const auto& name : cd.lattice) cd.table_generators.push_back(find_function(cd, name).weight);
  for (const auto& name : cd.semigroup)
    cd.table_generators.push_back(find_function(cd, name).weight);

  cd.sample_h = [n, m](Rng& rng, bool) {
    Mat s = random_element(FactorType::sl(2), rng, 4);
    Mat f1 = embed_at(2 * n, {1, 2 * n}, s);
    if (n >= 2) f1 = f1 * central_sp_embed(2 * n, random_element(FactorType::sp(2 * n - 2), rng, 4 * (n - 1)));
    Mat f2 = embed_at(2 * m, {1, 2 * m}, s);
    if (m >= 2) f2 = f2 * central_sp_embed(2 * m, random_element(FactorType::sp(2 * m - 2), rng, 4 * (m - 1)));
    return SubgroupSample{GroupElement{{f1, f2}}, Rat(1)};
  };
  return cd;
}

CaseData make_case6(const CaseParams& pr) {
  int n = pr.n;
  CaseData cd;
  cd.id = 6;
  cd.description = "Sp(2n) x Sp(4) over Sp(2n-4) x the diagonal Sp(4)";
  cd.shape = {FactorType::sp(2 * n), FactorType::sp(4)};
  cd.params = pr;

  std::vector<int> sc{1, 2, 2 * n - 1, 2 * n};
  auto r_of = [n, sc](const GroupElement& g) {
    return g.g[0] * embed_at(2 * n, sc, g.g[1]).inverse();
  };

  auto delta_minor = [n, sc](const Mat& r, int i) {
    std::vector<int> cols(sc.begin(), sc.begin() + i);
    return r.minor_det(last_rows(2 * n, i), cols);
  };

  int dmax = (n >= 4) ? 4 : 3;
  for (int i = 1; i <= dmax; ++i) {
    Weight w;
    if (i == 1)
      w = fund(cd.shape, 0, 1) + fund(cd.shape, 1, 1);
    else if (i == 2)
      w = fund(cd.shape, 0, 2) + fund(cd.shape, 1, 2);
    else if (i == 3)
      w = fund(cd.shape, 0, 3) + fund(cd.shape, 1, 1);
    else
      w = fund(cd.shape, 0, 4);
    cd.functions.push_back({"Delta_" + std::to_string(i), ew(w),
                            [r_of, delta_minor, i](const GroupElement& g) {
                              Mat r = r_of(g);
                              return delta_minor(r, i);
                            }});
  }
  auto d_eval = [r_of, n](const GroupElement& g) {
    Mat r = r_of(g);
    int N = 2 * n;
    Rat v = r.at(N - 1, 0) * r.at(N - 2, N - 1) - r.at(N - 2, 0) * r.at(N - 1, N - 1) +
            r.at(N - 1, 1) * r.at(N - 2, N - 2) - r.at(N - 2, 1) * r.at(N - 1, N - 2);
    return v;
  };
  cd.functions.push_back({"D", ew(fund(cd.shape, 0, 2)), d_eval});
  cd.functions.push_back(
      {"F", ew(fund(cd.shape, 0, 1) + fund(cd.shape, 0, 3) + fund(cd.shape, 1, 2)),
       [r_of, delta_minor, n](const GroupElement& g) {
         Mat r = r_of(g);
         Rat phi = r.minor_det(last_rows(2 * n, 3), {1, 2, 2 * n});
         Rat v = delta_minor(r, 1) * phi + r.at(2 * n - 1, 1) * delta_minor(r, 3);
         return v;
       }});

  cd.m_set = {"Delta_1", "Delta_2", "Delta_3"};
  if (n >= 4) cd.m_set.push_back("Delta_4");
  cd.lattice = {"Delta_1", "Delta_2", "Delta_3"};
  if (n >= 4) cd.semigroup.push_back("Delta_4");
  cd.semigroup.push_back("D");
  cd.semigroup.push_back("F");

  if (n == 3) {
    Relation rel;
    rel.text = "Delta_4 = -D";
    rel.lhs_weight = ew(fund(cd.shape, 0, 2));
    rel.rhs_weight = rel.lhs_weight;
    rel.sides = [r_of, delta_minor, d_eval](const GroupElement& g) {
      Mat r = r_of(g);
      Rat l = delta_minor(r, 4);
      Rat rhs = d_eval(g);
      rhs = -rhs;
      return std::make_pair(l, rhs);
    };
    cd.relations.push_back(rel);
  }

  cd.central_sp = {{0, 2}};

  for (const auto& name : cd.lattice) cd.table_generators.push_back(find_function(cd, name).weight);
  for (const auto& name : cd.semigroup)
    cd.table_generators.push_back(find_function(cd, name).weight);

  cd.sample_h = [n, sc](Rng& rng, bool) {
    Mat c = random_element(FactorType::sp(4), rng, 8);
    Mat a = random_element(FactorType::sp(2 * n - 4), rng, 4 * (n - 2));
    Mat f1 = embed_at(2 * n, sc, c) * central_sp_embed(2 * n, a);
    return SubgroupSample{GroupElement{{f1, c}}, Rat(1)};
  };
  return cd;
}

CaseData make_case7(const CaseParams& pr) {
  int n = pr.n, m = pr.m, l = pr.l;
  CaseData cd;
  cd.id = 7;
  cd.description = "Sp(2n) x Sp(2m) x Sp(2l) over the centrals and a diagonal Sp(2)";
  cd.shape = {FactorType::sp(2 * n), FactorType::sp(2 * m), FactorType::sp(2 * l)};
  cd.params = pr;

  int sizes[3] = {n, m, l};
  for (int f = 0; f < 3; ++f) {
    if (sizes[f] < 2) continue;
    cd.functions.push_back({"Delta_" + std::to_string(f + 1), ew(fund(cd.shape, f, 2)),
                            [f](const GroupElement& g) { return corner_det(g.g[f]); }});
  }
  cd.functions.push_back({"D_1", ew(fund(cd.shape, 0, 1) + fund(cd.shape, 1, 1)),
                          [](const GroupElement& g) { return corner_pair(g.g[0], g.g[1]); }});
  cd.functions.push_back({"D_2", ew(fund(cd.shape, 1, 1) + fund(cd.shape, 2, 1)),
                          [](const GroupElement& g) { return corner_pair(g.g[1], g.g[2]); }});
  cd.functions.push_back({"D_3", ew(fund(cd.shape, 0, 1) + fund(cd.shape, 2, 1)),
                          [](const GroupElement& g) { return corner_pair(g.g[0], g.g[2]); }});

  cd.m_set = {"D_1", "D_3"};
  if (n >= 2) cd.m_set.push_back("Delta_1");
  if (m >= 2) cd.m_set.push_back("Delta_2");
  if (l >= 2) cd.m_set.push_back("Delta_3");

  if (n >= 2) cd.lattice.push_back("Delta_1");
  cd.lattice.push_back("D_1");
  cd.lattice.push_back("D_3");
  if (m >= 2) cd.semigroup.push_back("Delta_2");
  if (l >= 2) cd.semigroup.push_back("Delta_3");
  cd.semigroup.push_back("D_2");

  auto const_rel = [&cd](const std::string& text, int factor) {
    Relation rel;
    rel.text = text;
    rel.lhs_weight = ew(Weight::zero(cd.shape));
    rel.rhs_weight = rel.lhs_weight;
    rel.sides = [factor](const GroupElement& g) {
      return std::make_pair(corner_det(g.g[factor]), Rat(1));
    };
    return rel;
  };
  if (n == 1) cd.relations.push_back(const_rel("Delta_1 = 1", 0));
  if (m == 1) cd.relations.push_back(const_rel("Delta_2 = 1", 1));
  if (l == 1) cd.relations.push_back(const_rel("Delta_3 = 1", 2));

  cd.central_sp = {{0, 1}, {1, 1}, {2, 1}};

  for (const auto& name : cd.lattice) cd.table_generators.push_back(find_function(cd, name).weight);
  for (const auto& name : cd.semigroup)
    cd.table_generators.push_back(find_function(cd, name).weight);

  cd.sample_h = [n, m, l](Rng& rng, bool) {
    Mat s = random_element(FactorType::sl(2), rng, 4);
    int sizes2[3] = {n, m, l};
    std::vector<Mat> fs;
    for (int f = 0; f < 3; ++f) {
      int sz = sizes2[f];
      Mat mf = embed_at(2 * sz, {1, 2 * sz}, s);
      if (sz >= 2)
        mf = mf * central_sp_embed(2 * sz, random_element(FactorType::sp(2 * sz - 2), rng, 4 * (sz - 1)));
      fs.push_back(mf);
    }
    return SubgroupSample{GroupElement{fs}, Rat(1)};
  };
  return cd;
}

CaseData make_case8(const CaseParams& pr) {
  int n = pr.n, m = pr.m;
  CaseData cd;
  cd.id = 8;
  cd.description = "Sp(2n) x Sp(4) x Sp(2m) over the centrals and two diagonal Sp(2)";
  cd.shape = {FactorType::sp(2 * n), FactorType::sp(4), FactorType::sp(2 * m)};
  cd.params = pr;

  auto q = [](const GroupElement& g, int i, int j) { return ent(g, 1, i, j); };
  auto d1_eval = [q](const GroupElement& g) {
    Rat v = q(g, 3, 1) * q(g, 4, 4) - q(g, 3, 4) * q(g, 4, 1);
    return v;
  };
  auto d2_eval = [q](const GroupElement& g) {
    Rat v = q(g, 3, 2) * q(g, 4, 3) - q(g, 3, 3) * q(g, 4, 2);
    return v;
  };
  auto sd1_eval = [q](const GroupElement& g) {
    const Mat& p = g.g[0];
    int N = p.rows();
    Rat v = p.at(N - 1, 0) * q(g, 4, 4) - p.at(N - 1, N - 1) * q(g, 4, 1);
    return v;
  };
  auto sd2_eval = [q](const GroupElement& g) {
    const Mat& r = g.g[2];
    int M = r.rows();
    Rat v = r.at(M - 1, 0) * q(g, 4, 3) - r.at(M - 1, M - 1) * q(g, 4, 2);
    return v;
  };

  cd.functions.push_back({"Delta_1", ew(fund(cd.shape, 1, 2)), d1_eval});
  cd.functions.push_back({"Delta_2", ew(fund(cd.shape, 1, 2)), d2_eval});
  cd.functions.push_back(
      {"delta_1", ew(fund(cd.shape, 0, 1) + fund(cd.shape, 1, 1)), sd1_eval});
  cd.functions.push_back(
      {"delta_2", ew(fund(cd.shape, 1, 1) + fund(cd.shape, 2, 1)), sd2_eval});
  if (n >= 2)
    cd.functions.push_back({"D_1", ew(fund(cd.shape, 0, 2)),
                            [](const GroupElement& g) { return corner_det(g.g[0]); }});
  if (m >= 2)
    cd.functions.push_back({"D_2", ew(fund(cd.shape, 2, 2)),
                            [](const GroupElement& g) { return corner_det(g.g[2]); }});
  cd.functions.push_back(
      {"Delta", ew(fund(cd.shape, 0, 1) + fund(cd.shape, 1, 2) + fund(cd.shape, 2, 1)),
       [q, sd1_eval, sd2_eval](const GroupElement& g) {
         const Mat& p = g.g[0];
         const Mat& r = g.g[2];
         int N = p.rows(), M = r.rows();
         Rat a = p.at(N - 1, 0) * q(g, 3, 4) - p.at(N - 1, N - 1) * q(g, 3, 1);
         Rat b = r.at(M - 1, 0) * q(g, 3, 3) - r.at(M - 1, M - 1) * q(g, 3, 2);
         Rat v = sd2_eval(g) * a - sd1_eval(g) * b;
         return v;
       }});

  cd.m_set = {"Delta_1", "delta_1", "delta_2"};
  if (n >= 2) cd.m_set.push_back("D_1");
  if (m >= 2) cd.m_set.push_back("D_2");

  cd.lattice = {"Delta_1", "delta_1", "delta_2"};
  if (n >= 2) cd.semigroup.push_back("D_1");
  if (m >= 2) cd.semigroup.push_back("D_2");
  cd.semigroup.push_back("Delta");

  {
    Relation rel;
    rel.text = "Delta_2 = -Delta_1";
    rel.lhs_weight = ew(fund(cd.shape, 1, 2));
    rel.rhs_weight = rel.lhs_weight;
    rel.sides = [d1_eval, d2_eval](const GroupElement& g) {
      Rat r = d1_eval(g);
      r = -r;
      return std::make_pair(d2_eval(g), r);
    };
    cd.relations.push_back(rel);
  }
  auto const_rel = [&cd](const std::string& text, int factor) {
    Relation rel;
    rel.text = text;
    rel.lhs_weight = ew(Weight::zero(cd.shape));
    rel.rhs_weight = rel.lhs_weight;
    rel.sides = [factor](const GroupElement& g) {
      return std::make_pair(corner_det(g.g[factor]), Rat(1));
    };
    return rel;
  };
  if (n == 1) cd.relations.push_back(const_rel("D_1 = 1", 0));
  if (m == 1) cd.relations.push_back(const_rel("D_2 = 1", 2));

  cd.a2.push_back({"Delta", "Delta_1",
                   GroupElement{{Mat::identity(2 * n), Mat::skew_form(4), Mat::identity(2 * m)}}});

  cd.central_sp = {{0, 1}, {2, 1}};

  for (const auto& name : cd.lattice) cd.table_generators.push_back(find_function(cd, name).weight);
  for (const auto& name : cd.semigroup)
    cd.table_generators.push_back(find_function(cd, name).weight);

  cd.sample_h = [n, m](Rng& rng, bool) {
    Mat s2 = random_element(FactorType::sl(2), rng, 4);
    Mat s3 = random_element(FactorType::sl(2), rng, 4);
    Mat f1 = embed_at(2 * n, {1, 2 * n}, s2);
    if (n >= 2) f1 = f1 * central_sp_embed(2 * n, random_element(FactorType::sp(2 * n - 2), rng, 4 * (n - 1)));
    Mat f2 = embed_at(4, {1, 4}, s2) * embed_at(4, {2, 3}, s3);
    Mat f3 = embed_at(2 * m, {1, 2 * m}, s3);
    if (m >= 2) f3 = f3 * central_sp_embed(2 * m, random_element(FactorType::sp(2 * m - 2), rng, 4 * (m - 1)));
    return SubgroupSample{GroupElement{{f1, f2, f3}}, Rat(1)};
  };
  return cd;
}

}  // namespace

int num_cases() { return 8; }

bool params_valid(int case_id, const CaseParams& p, std::string* why) {
  auto fail = [why](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  auto need_zero = [&](bool mz, bool lz) {
    if (mz && p.m != 0) return std::string("m is not a parameter of this case");
    if (lz && p.l != 0) return std::string("l is not a parameter of this case");
    return std::string();
  };
  std::string msg;
  switch (case_id) {
    case 1:
      if (!(msg = need_zero(true, true)).empty()) return fail(msg);
      if (p.n < 2) return fail("case 1 needs n >= 2");
      return true;
    case 2:
      if (!(msg = need_zero(true, true)).empty()) return fail(msg);
      if (p.n < 3) return fail("case 2 needs n >= 3");
      return true;
    case 3:
      if (!(msg = need_zero(false, true)).empty()) return fail(msg);
      if (p.n < 3) return fail("case 3 needs n >= 3");
      if (p.m < 1) return fail("case 3 needs m >= 1");
      return true;
    case 4:
      if (!(msg = need_zero(false, true)).empty()) return fail(msg);
      if (p.n < 5) return fail("case 4 needs n >= 5");
      if (p.m < 1) return fail("case 4 needs m >= 1");
      return true;
    case 5:
      if (!(msg = need_zero(false, true)).empty()) return fail(msg);
      if (p.n < 1 || p.m < 1) return fail("case 5 needs n, m >= 1");
      return true;
    case 6:
      if (!(msg = need_zero(true, true)).empty()) return fail(msg);
      if (p.n < 3) return fail("case 6 needs n >= 3");
      return true;
    case 7:
      if (p.n < 1 || p.m < 1 || p.l < 1) return fail("case 7 needs n, m, l >= 1");
      return true;
    case 8:
      if (!(msg = need_zero(false, true)).empty()) return fail(msg);
      if (p.n < 1 || p.m < 1) return fail("case 8 needs n, m >= 1");
      return true;
    default:
      return fail("case id must be 1..8");
  }
}

std::vector<CaseParams> case_grid(int case_id) {
  std::vector<CaseParams> out;
  switch (case_id) {
    case 1:
      for (int n = 2; n <= 5; ++n) out.push_back({n, 0, 0});
      break;
    case 2:
      for (int n = 3; n <= 8; ++n) out.push_back({n, 0, 0});
      break;
    case 3:
      for (int n = 3; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) out.push_back({n, m, 0});
      break;
    case 4:
      for (int n = 5; n <= 6; ++n)
        for (int m = 1; m <= 4; ++m) out.push_back({n, m, 0});
      break;
    case 5:
      for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) out.push_back({n, m, 0});
      break;
    case 6:
      for (int n = 3; n <= 4; ++n) out.push_back({n, 0, 0});
      break;
    case 7:
      for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
          for (int l = 1; l <= 4; ++l) out.push_back({n, m, l});
      break;
    case 8:
      for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) out.push_back({n, m, 0});
      break;
    default:
      throw std::invalid_argument("case id must be 1..8");
  }
  return out;
}

CaseData make_case(int case_id, const CaseParams& p) {
  std::string why;
  if (!params_valid(case_id, p, &why)) throw std::invalid_argument(why);
  switch (case_id) {
    case 1:
      return make_case1(p);
    case 2:
      return make_case2(p);
    case 3:
    case 4:
      return make_case34(case_id, p);
    case 5:
      return make_case5(p);
    case 6:
      return make_case6(p);
    case 7:
      return make_case7(p);
    case 8:
      return make_case8(p);
  }
  throw std::invalid_argument("case id must be 1..8");
}

SemigroupPresentation case_presentation(const CaseData& cd) {
  SemigroupPresentation pres;
  pres.shape = cd.shape;
  if (cd.id <= 2) {
    pres.gens = cd.table_generators;
    pres.num_lattice = 0;
    if (cd.id == 1) {
      for (const auto& f : cd.functions) pres.names.push_back(f.name);
    } else {
      for (const auto& g : cd.table_generators)
        pres.names.push_back(weight_to_string(cd.shape, g.w));
    }
    return pres;
  }
  for (const auto& name : cd.lattice) {
    pres.gens.push_back(find_function(cd, name).weight);
    pres.names.push_back(name);
  }
  pres.num_lattice = pres.gens.size();
  for (const auto& name : cd.semigroup) {
    pres.gens.push_back(find_function(cd, name).weight);
    pres.names.push_back(name);
  }
  return pres;
}

const WeightFunction& find_function(const CaseData& cd, const std::string& name) {
  for (const auto& f : cd.functions)
    if (f.name == name) return f;
  throw std::invalid_argument("no function named " + name + " in case " + std::to_string(cd.id));
}

bool has_function(const CaseData& cd, const std::string& name) {
  for (const auto& f : cd.functions)
    if (f.name == name) return true;
  return false;
}

Mat diag_case_embed(int case_id, int n, const Mat& p) {
  if (case_id == 1) {
    Mat ptil = Mat::identity(n + 1);
    ptil.set_block(0, 0, p);
    return ptil;
  }
  if (case_id == 2) return so_step_embed(p);
  throw std::invalid_argument("diagonal embedding applies to cases 1 and 2");
}

Mat case_r_matrix(const CaseData& cd, const GroupElement& g) {
  if (cd.id == 1 || cd.id == 2)
    return g.g[1] * diag_case_embed(cd.id, cd.params.n, g.g[0]).inverse();
  if (cd.id == 6) {
    int n = cd.params.n;
    return g.g[0] * embed_at(2 * n, {1, 2, 2 * n - 1, 2 * n}, g.g[1]).inverse();
  }
  throw std::invalid_argument("no orbit-map matrix for case " + std::to_string(cd.id));
}

}  // namespace ews
