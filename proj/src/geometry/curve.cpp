#include "effbounds/geometry/curve.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "effbounds/error.hpp"

namespace effbounds::geom {

int ParameterizedCurve::degree() const {
  int d = 0;
  for (const auto& x : coords)
    for (int j = static_cast<int>(x.size()) - 1; j >= 0; --j)
      if (x[static_cast<std::size_t>(j)] != 0) {
        d = std::max(d, j);
        break;
      }
  return d;
}

ParameterizedCurve make_curve(std::vector<std::vector<mpq_class>> coords) {
  if (coords.size() < 2) throw error(errc::shape_mismatch, "a curve needs at least two coordinates");
  bool any = false;
  for (const auto& x : coords)
    for (const mpq_class& v : x) any = any || v != 0;
  if (!any) throw error(errc::zero_vector, "every coordinate polynomial is zero");
  return ParameterizedCurve{std::move(coords)};
}

namespace {

using Poly = std::vector<mpq_class>;  // index = power of t

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// remainder of f by g (g nonzero, trimmed)
Poly rem(Poly f, const Poly& g) {
  trim(f);
  while (f.size() >= g.size()) {
    const mpq_class q = f.back() / g.back();
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= q * g[i];
    trim(f);
  }
  return f;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly quotient(Poly f, const Poly& g) {
  trim(f);
  if (f.size() < g.size()) return {};
  Poly q(f.size() - g.size() + 1);
  while (f.size() >= g.size()) {
    const mpq_class c = f.back() / g.back();
    const std::size_t shift = f.size() - g.size();
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
    trim(f);
  }
  return q;
}

}  // namespace

bool lies_on(const ParameterizedCurve& c, const ZVec& pt) {
  if (pt.size() != static_cast<Eigen::Index>(c.coords.size()))
    throw error(errc::shape_mismatch, "point and curve live in different spaces");
  if (is_zero(pt)) throw error(errc::zero_vector, "the zero vector is not a projective point");
  // strip common roots of the coordinates, which are not points of the curve
  Poly h;
  for (const auto& x : c.coords) h = gcd(h, x);
  std::vector<Poly> X;
  for (const auto& x : c.coords) X.push_back(quotient(x, h));
  std::size_t D = 0;
  for (const Poly& x : X) D = std::max(D, x.size());
  // t = infinity
  QVec lead(static_cast<Eigen::Index>(X.size()));
  for (std::size_t i = 0; i < X.size(); ++i) lead(static_cast<Eigen::Index>(i)) = X[i].size() == D ? X[i].back() : 0;
  if (projectively_equal(to_qvec(pt), lead)) return true;
  Poly g;
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      Poly m(D);
      for (std::size_t a = 0; a < X[j].size(); ++a) m[a] += pt(static_cast<Eigen::Index>(i)) * X[j][a];
      for (std::size_t a = 0; a < X[i].size(); ++a) m[a] -= pt(static_cast<Eigen::Index>(j)) * X[i][a];
      g = gcd(g, m);
    }
  // g empty: every 2x2 minor vanishes identically, the curve is the point itself
  return g.size() != 1;
}

QVec evaluate(const ParameterizedCurve& c, const mpq_class& t) {
  QVec v(static_cast<Eigen::Index>(c.coords.size()));
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    mpq_class s = 0;
    for (auto j = c.coords[i].size(); j-- > 0;) s = s * t + c.coords[i][j];
    v(static_cast<Eigen::Index>(i)) = s;
  }
  return v;
}

ZVec evaluate_homogeneous(const ParameterizedCurve& c, const mpz_class& p, const mpz_class& q) {
  const int D = c.degree();
  std::vector<mpz_class> pp(static_cast<std::size_t>(D) + 1), qq(static_cast<std::size_t>(D) + 1);
  pp[0] = qq[0] = 1;
  for (int j = 1; j <= D; ++j) {
    pp[static_cast<std::size_t>(j)] = pp[static_cast<std::size_t>(j) - 1] * p;
    qq[static_cast<std::size_t>(j)] = qq[static_cast<std::size_t>(j) - 1] * q;
  }
  QVec v(static_cast<Eigen::Index>(c.coords.size()));
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    mpq_class s = 0;
    for (std::size_t j = 0; j < c.coords[i].size() && static_cast<int>(j) <= D; ++j)
      if (c.coords[i][j] != 0) s += c.coords[i][j] * mpq_class(pp[j] * qq[static_cast<std::size_t>(D) - j]);
    v(static_cast<Eigen::Index>(i)) = s;
  }
  if (is_zero(v))
    throw error(errc::zero_vector, "all coordinates vanish at [" + p.get_str() + ":" + q.get_str() + "]");
  return primitive(v);
}

CurveSample sample_curve(const ParameterizedCurve& c, const std::vector<mpq_class>& ts) {
  std::set<mpq_class> seen(ts.begin(), ts.end());
  if (seen.size() != ts.size()) throw error(errc::invalid_params, "sample parameters must be pairwise distinct");
  CurveSample out;
  for (const mpq_class& t : ts) {
    QVec v = evaluate(c, t);
    if (is_zero(v)) throw error(errc::zero_vector, "all coordinates vanish at t = " + t.get_str());
    out.points.emplace_back(std::move(v));
  }
  for (std::size_t i = 0; i < out.points.size(); ++i)
    for (std::size_t j = i + 1; j < out.points.size(); ++j)
      if (out.points[i] == out.points[j]) out.duplicates.emplace_back(i, j);
  return out;
}

const std::vector<std::pair<mpz_class, mpz_class>>& parameter_pairs(std::size_t count) {
  static std::vector<std::pair<mpz_class, mpz_class>> pairs{{0, 1}, {1, 0}};
  static long height = 0;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (pairs.size() < count) {
    ++height;
    // coprime pairs with max(|p|, q) == height
    for (long q = 1; q <= height; ++q)
      for (long a = 0; a <= height; ++a) {
        if (a == 0 || std::max(a, q) != height || std::gcd(a, q) != 1) continue;
        pairs.emplace_back(a, q);
        pairs.emplace_back(-a, q);
      }
  }
  return pairs;
}

ParameterizedCurve reparametrize(const ParameterizedCurve& c, long a, long b, long cc, long d) {
  if (a * d - b * cc == 0) throw error(errc::invalid_params, "reparametrization must be invertible");
  const int D = c.degree();
  // (a t + b)^j (c t + d)^(D-j) as coefficient lists
  auto lin_pow = [](long u, long v, int e) {
    std::vector<mpq_class> r{1};
    for (int k = 0; k < e; ++k) {
      std::vector<mpq_class> n(r.size() + 1, 0);
      for (std::size_t i = 0; i < r.size(); ++i) {
        n[i] += r[i] * v;
        n[i + 1] += r[i] * u;
      }
      r = std::move(n);
    }
    return r;
  };
  ParameterizedCurve out;
  for (const auto& x : c.coords) {
    std::vector<mpq_class> y(static_cast<std::size_t>(D) + 1, 0);
    for (std::size_t j = 0; j < x.size() && static_cast<int>(j) <= D; ++j) {
      if (x[j] == 0) continue;
      std::vector<mpq_class> num = lin_pow(a, b, static_cast<int>(j)), den = lin_pow(cc, d, D - static_cast<int>(j));
      for (std::size_t u = 0; u < num.size(); ++u)
        for (std::size_t v = 0; v < den.size(); ++v) y[u + v] += x[j] * num[u] * den[v];
    }
    out.coords.push_back(std::move(y));
  }
  return out;
}

ParameterizedCurve random_curve(int ambient, int deg, Rng& rng, long bound) {
  for (;;) {
    ParameterizedCurve c;
    for (int i = 0; i <= ambient; ++i) {
      std::vector<mpq_class> x(static_cast<std::size_t>(deg) + 1);
      for (auto& v : x) v = rng.uniform(-bound, bound);
      c.coords.push_back(std::move(x));
    }
    c.coords[0][static_cast<std::size_t>(deg)] = rng.nonzero(bound);
    // coordinates without a common root at t = 0 or infinity; other common roots are rare
    bool zero_at_0 = true, zero_at_inf = true;
    for (const auto& x : c.coords) {
      zero_at_0 = zero_at_0 && x[0] == 0;
      zero_at_inf = zero_at_inf && x.back() == 0;
    }
    if (!zero_at_0 && !zero_at_inf) return c;
  }
}

ParameterizedCurve named_curve(const std::string& name) {
  if (name == "twisted-cubic") return make_curve({{1}, {0, 1}, {0, 0, 1}, {0, 0, 0, 1}});
  if (name == "line") return make_curve({{1}, {0, 1}, {0}, {0}});
  if (name == "conic") return make_curve({{1}, {0, 1}, {0, 0, 1}});
  throw error(errc::invalid_params, "unknown curve '" + name + "' (known: twisted-cubic, line, conic)");
}

}  // namespace effbounds::geom
