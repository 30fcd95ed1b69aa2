#include "effbounds/geometry/chow.hpp"

#include <map>
#include <set>

#include "effbounds/error.hpp"
#include "effbounds/geometry/linalg.hpp"

namespace effbounds::geom {

namespace {

std::string key(const ZVec& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += v(i).get_str() + ",";
  return s;
}

struct Recovered {
  PlaneChowPoint chow;
  int degree = 0;
};

// Smallest-degree curve through pts, trying `expected` first.
Recovered recover_image(const std::vector<ZVec>& pts, int expected, std::vector<std::string>& diag) {
  std::vector<ZVec> ns = nullspace(monomial_matrix(pts, expected));
  if (ns.size() == 1) return {{expected, ns[0]}, expected};
  if (ns.empty())
    throw error(errc::no_curve, "no curve of degree " + std::to_string(expected) + " through the image points");
  for (int e = 1; e < expected; ++e) {
    const ZMat A = monomial_matrix(pts, e);
    if (rank_mod_p(A) == A.cols()) continue;  // full rank mod p forces full rank over Q
    std::vector<ZVec> low = nullspace(A);
    if (low.empty()) continue;
    if (low.size() > 1)
      throw error(errc::ambiguous_curve, std::to_string(low.size()) + " independent curves of degree " +
                                             std::to_string(e) + " through the image points");
    diag.push_back("image has degree " + std::to_string(e) + ", below the expected " + std::to_string(expected));
    return {{e, low[0]}, e};
  }
  throw error(errc::ambiguous_curve, "image points do not determine a curve");
}

using SparsePoly = std::map<Exponent, mpz_class>;

SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r[e] += ca * cb;
    }
  return r;
}

mpz_class binary_eval(const std::vector<mpz_class>& f, const mpz_class& a, const mpz_class& b) {
  // sum f[i] a^i b^(deg-i)
  const auto deg = f.size() - 1;
  mpz_class s = 0, ap, bp;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_pow_ui(ap.get_mpz_t(), a.get_mpz_t(), i);
    mpz_pow_ui(bp.get_mpz_t(), b.get_mpz_t(), deg - i);
    s += f[i] * ap * bp;
  }
  return s;
}

}  // namespace

bool PlaneChowPoint::contains(const ZVec& pt) const {
  const auto& mons = monomials(3, degree);
  mpz_class s = 0;
  for (std::size_t i = 0; i < mons.size(); ++i) s += coeffs(static_cast<Eigen::Index>(i)) * monomial_value(mons[i], pt);
  return s == 0;
}

std::string PlaneChowPoint::to_string() const {
  return "degree " + std::to_string(degree) + " " + geom::to_string(to_qvec(coeffs));
}

bool operator==(const PlaneChowPoint& a, const PlaneChowPoint& b) {
  return a.degree == b.degree && projectively_equal(a.coeffs, b.coeffs);
}

ZMat monomial_matrix(const std::vector<ZVec>& pts, int d) {
  const auto& mons = monomials(3, d);
  ZMat A(static_cast<Eigen::Index>(pts.size()), static_cast<Eigen::Index>(mons.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].size() != 3) throw error(errc::shape_mismatch, "plane points need three coordinates");
    for (std::size_t j = 0; j < mons.size(); ++j)
      A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = monomial_value(mons[j], pts[i]);
  }
  return A;
}

PlaneChowPoint recover_plane_curve(const std::vector<ZVec>& pts, int d) {
  if (d < 1) throw error(errc::invalid_params, "curve degree must be >= 1");
  std::set<std::string> seen;
  for (const ZVec& p : pts)
    if (!seen.insert(key(primitive(p))).second)
      throw error(errc::invalid_params, "points must be pairwise distinct");
  std::vector<ZVec> ns = nullspace(monomial_matrix(pts, d));
  if (ns.empty()) throw error(errc::no_curve, "no curve of degree " + std::to_string(d) + " passes through the points");
  if (ns.size() > 1)
    throw error(errc::ambiguous_curve, "nullspace of dimension " + std::to_string(ns.size()) +
                                           ": the points do not determine a degree-" + std::to_string(d) + " curve");
  return {d, ns[0]};
}

PlaneChowPoint recover_plane_curve(const std::vector<ProjectivePoint>& pts, int d) {
  std::vector<ZVec> z;
  for (const ProjectivePoint& p : pts) z.push_back(p.integer_coords());
  return recover_plane_curve(z, d);
}

int curve_space_dimension(const std::vector<ZVec>& pts, int d) {
  return static_cast<int>(nullspace(monomial_matrix(pts, d)).size());
}

ZVec chow_determinant_vector(const std::vector<ParameterizedCurve>& moving_points, int d, const mpq_class& t0) {
  if (d < 1) throw error(errc::invalid_params, "curve degree must be >= 1");
  const auto& mons = monomials(3, d);
  const std::size_t C = mons.size();
  if (moving_points.size() < C - 1)
    throw error(errc::shape_mismatch, "need " + std::to_string(C - 1) + " moving points, got " +
                                          std::to_string(moving_points.size()));
  QMat A(static_cast<Eigen::Index>(C - 1), static_cast<Eigen::Index>(C));
  for (std::size_t i = 0; i + 1 < C; ++i) {
    if (moving_points[i].ambient() != 2) throw error(errc::shape_mismatch, "moving points must lie in P^2");
    const QVec x = evaluate(moving_points[i], t0);
    if (is_zero(x)) throw error(errc::zero_vector, "moving point " + std::to_string(i) + " vanishes at t0");
    for (std::size_t j = 0; j < C; ++j)
      A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = monomial_value(mons[j], x);
  }
  const ZMat Z = integer_rows(A);
  ZVec out(static_cast<Eigen::Index>(C));
  for (std::size_t a = 0; a < C; ++a) {
    ZMat minor(Z.rows(), Z.cols() - 1);
    for (Eigen::Index j = 0, k = 0; j < Z.cols(); ++j)
      if (j != static_cast<Eigen::Index>(a)) minor.col(k++) = Z.col(j);
    mpz_class det = determinant(minor);
    out(static_cast<Eigen::Index>(a)) = (a % 2) ? mpz_class(-det) : det;
  }
  if (is_zero(out)) throw error(errc::degenerate_subsystem, "every maximal minor vanishes at t0 = " + t0.get_str());
  return out;
}

ProjectedChow project_curve_to_plane_chow(const ParameterizedCurve& c, int l, const LinearProjection& pi,
                                          const PerturbedVeronese* forms) {
  if (l < 1) throw error(errc::invalid_params, "Veronese degree must be >= 1");
  const int m = c.ambient();
  const auto target = static_cast<Eigen::Index>(monomials(m + 1, l).size());
  if (target != pi.rows.cols())
    throw error(errc::shape_mismatch, "Veronese image lies in P^" + std::to_string(target - 1) +
                                          " but the projection starts from P^" + std::to_string(pi.source_dim()));
  if (forms && (forms->l != l || forms->m != m)) throw error(errc::shape_mismatch, "perturbed forms have the wrong shape");

  ProjectedChow out;
  out.expected_degree = l * c.degree();
  const auto need = static_cast<std::size_t>(out.expected_degree * out.expected_degree + 1);
  const std::size_t budget = 4 * need + 64;
  const auto& params = parameter_pairs(budget);
  std::set<std::string> seen;
  std::vector<ZVec> pts;
  for (std::size_t i = 0; i < budget && pts.size() < need; ++i) {
    ZVec x;
    try {
      x = evaluate_homogeneous(c, params[i].first, params[i].second);
    } catch (const error&) {
      continue;  // common root of the coordinates
    }
    const ZVec v = forms ? forms->apply(x) : veronese(x, l);
    if (is_zero(v)) continue;
    ZVec y = apply_projection(v, pi);
    if (is_zero(y)) {
      ++out.light_source_hits;
      continue;
    }
    y = primitive(y);
    if (seen.insert(key(y)).second) pts.push_back(std::move(y));
  }
  if (pts.size() <= 1)
    throw error(errc::image_is_point, "all " + std::to_string(budget) + " samples map to one point");
  if (pts.size() < need)
    throw error(errc::ambiguous_curve, "only " + std::to_string(pts.size()) + " distinct image points, need " +
                                           std::to_string(need));
  out.samples = pts.size();
  Recovered r = recover_image(pts, out.expected_degree, out.diagnostics);
  out.chow = r.chow;
  out.recovered_degree = r.degree;
  if (r.degree > 0 && out.expected_degree % r.degree == 0) out.multiplicity = out.expected_degree / r.degree;
  return out;
}

MatchResult match_via_projections(const ParameterizedCurve& c1, const ParameterizedCurve& c2,
                                  const std::vector<LinearProjection>& pis, int l,
                                  const PerturbedVeronese* forms) {
  MatchResult res;
  for (std::size_t nu = 0; nu < pis.size(); ++nu) {
    const ProjectedChow a = project_curve_to_plane_chow(c1, l, pis[nu], forms);
    const ProjectedChow b = project_curve_to_plane_chow(c2, l, pis[nu], forms);
    res.degrees1.push_back(a.recovered_degree);
    res.degrees2.push_back(b.recovered_degree);
    if (!(a.chow == b.chow)) {
      res.match = false;
      res.distinguished_at = static_cast<int>(nu) + 1;
      return res;
    }
  }
  return res;
}

const char* image_kind_name(ImageKind k) {
  switch (k) {
    case ImageKind::Curve: return "Curve";
    case ImageKind::Point: return "Point";
    case ImageKind::Undefined: return "Undefined";
  }
  return "?";
}

ImageCheck image_dimension_check(const HomogeneousPolynomial& f0, const HomogeneousPolynomial& f1,
                                 const HomogeneousPolynomial& f2, const ParameterizedCurve& c,
                                 std::size_t sample_count) {
  const int n = c.ambient() + 1;
  if (f0.nvars() != n || f1.nvars() != n || f2.nvars() != n)
    throw error(errc::shape_mismatch, "forms and curve live in different spaces");
  if (f0.degree() != f1.degree() || f1.degree() != f2.degree())
    throw error(errc::shape_mismatch, "forms must share one degree");
  ImageCheck out;
  const auto& params = parameter_pairs(sample_count);
  std::set<std::string> seen;
  std::vector<ZVec> pts;
  for (std::size_t i = 0; i < sample_count; ++i) {
    ZVec x;
    try {
      x = evaluate_homogeneous(c, params[i].first, params[i].second);
    } catch (const error&) {
      continue;
    }
    const QVec xq = to_qvec(x);
    QVec y(3);
    y << f0.evaluate(xq), f1.evaluate(xq), f2.evaluate(xq);
    if (is_zero(y)) continue;
    ++out.defined_samples;
    ZVec z = primitive(y);
    if (seen.insert(key(z)).second) pts.push_back(std::move(z));
  }
  if (out.defined_samples == 0) return out;
  if (pts.size() == 1) {
    out.kind = ImageKind::Point;
    return out;
  }
  out.kind = ImageKind::Curve;
  const int expected = f0.degree() * c.degree();
  if (expected >= 1 && pts.size() >= static_cast<std::size_t>(expected * expected + 1)) {
    std::vector<std::string> diag;
    try {
      Recovered r = recover_image(pts, expected, diag);
      out.degree = r.degree;
      out.degree_matches = r.degree == expected;
    } catch (const error&) {
      // degree left unknown
    }
  }
  return out;
}

mpz_class binary_resultant(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g) {
  const auto m = static_cast<Eigen::Index>(f.size()) - 1, n = static_cast<Eigen::Index>(g.size()) - 1;
  if (m < 0 || n < 0) throw error(errc::shape_mismatch, "empty binary form");
  if (m + n == 0) return 1;
  ZMat S = ZMat::Constant(m + n, m + n, mpz_class(0));
  // coefficients from the highest power of x down
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index i = 0; i <= m; ++i) S(r, r + i) = f[static_cast<std::size_t>(m - i)];
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index i = 0; i <= n; ++i) S(n + r, r + i) = g[static_cast<std::size_t>(n - i)];
  return determinant(S);
}

MonoidCurve random_monoid_curve(int d, std::size_t npoints, Rng& rng) {
  if (d < 1) throw error(errc::invalid_params, "curve degree must be >= 1");
  std::vector<mpz_class> lo, hi;  // F_{d-1}, F_d
  for (;;) {
    lo.assign(static_cast<std::size_t>(d), 0);
    hi.assign(static_cast<std::size_t>(d) + 1, 0);
    for (auto& v : lo) v = rng.uniform(-5, 5);
    for (auto& v : hi) v = rng.uniform(-5, 5);
    bool lo_zero = true, hi_zero = true;
    for (auto& v : lo) lo_zero = lo_zero && v == 0;
    for (auto& v : hi) hi_zero = hi_zero && v == 0;
    if (lo_zero || hi_zero) continue;
    if (d == 1 || binary_resultant(lo, hi) != 0) break;
  }
  // G = F_{d-1}(x,y) z + F_d(x,y)
  SparsePoly G;
  for (int i = 0; i < d; ++i) G[{i, d - 1 - i, 1}] += lo[static_cast<std::size_t>(i)];
  for (int i = 0; i <= d; ++i) G[{i, d - i, 0}] += hi[static_cast<std::size_t>(i)];

  ZMat T(3, 3), adj(3, 3);
  mpz_class det;
  do {
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 3; ++j) T(i, j) = rng.uniform(-3, 3);
    det = determinant(T);
  } while (det == 0);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) {
      const Eigen::Index r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = T(r0, c0) * T(r1, c1) - T(r0, c1) * T(r1, c0);
    }

  // G'(X) = G(adj X) vanishes at T P whenever G(P) = 0
  std::vector<SparsePoly> lin(3);
  for (int r = 0; r < 3; ++r)
    for (int j = 0; j < 3; ++j)
      if (adj(r, j) != 0) {
        Exponent e{0, 0, 0};
        e[static_cast<std::size_t>(j)] = 1;
        lin[static_cast<std::size_t>(r)][e] = adj(r, j);
      }
  SparsePoly Gt;
  for (const auto& [e, cf] : G) {
    if (cf == 0) continue;
    SparsePoly term{{Exponent{0, 0, 0}, cf}};
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < e[static_cast<std::size_t>(r)]; ++k) term = multiply(term, lin[static_cast<std::size_t>(r)]);
    for (const auto& [e2, c2] : term) Gt[e2] += c2;
  }
  const auto& mons = monomials(3, d);
  ZVec coeffs(static_cast<Eigen::Index>(mons.size()));
  for (std::size_t i = 0; i < mons.size(); ++i) {
    auto it = Gt.find(mons[i]);
    coeffs(static_cast<Eigen::Index>(i)) = it == Gt.end() ? mpz_class(0) : it->second;
  }
  MonoidCurve out;
  out.equation = {d, primitive(coeffs)};

  auto grad_nonzero = [&](const ZVec& P) {
    for (int v = 0; v < 3; ++v) {
      mpz_class s = 0;
      for (const auto& [e, cf] : G) {
        if (e[static_cast<std::size_t>(v)] == 0 || cf == 0) continue;
        Exponent de = e;
        de[static_cast<std::size_t>(v)] -= 1;
        s += cf * e[static_cast<std::size_t>(v)] * monomial_value(de, P);
      }
      if (s != 0) return true;
    }
    return false;
  };

  std::set<std::string> seen;
  for (std::size_t i = 0; out.points.size() < npoints; ++i) {
    const auto& params = parameter_pairs(i + 1);
    const mpz_class& a = params[i].first;
    const mpz_class& b = params[i].second;
    const mpz_class F = binary_eval(lo, a, b);
    if (F == 0) continue;
    ZVec P(3);
    P << F * a, F * b, -binary_eval(hi, a, b);
    if (!grad_nonzero(P)) continue;
    ZVec Q(3);
    for (Eigen::Index r = 0; r < 3; ++r) Q(r) = T(r, 0) * P(0) + T(r, 1) * P(1) + T(r, 2) * P(2);
    Q = primitive(Q);
    if (seen.insert(key(Q)).second) out.points.push_back(std::move(Q));
  }
  return out;
}

}  // namespace effbounds::geom
