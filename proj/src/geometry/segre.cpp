#include "effbounds/geometry/segre.hpp"

#include <algorithm>
#include <set>

#include "effbounds/error.hpp"

namespace effbounds::geom {

int segre_flat_index(const std::vector<int>& idx, int k) {
  int f = 0;
  for (int i : idx) f = f * (k + 1) + i;
  return f;
}

std::vector<int> segre_multi_index(int flat, int k, int r) {
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int j = r - 1; j >= 0; --j) {
    idx[static_cast<std::size_t>(j)] = flat % (k + 1);
    flat /= k + 1;
  }
  return idx;
}

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

ZVec segre(const std::vector<ZVec>& pts) {
  if (pts.empty()) throw error(errc::shape_mismatch, "Segre embedding of zero factors");
  const auto n = pts[0].size();
  for (const ZVec& p : pts)
    if (p.size() != n) throw error(errc::shape_mismatch, "Segre factors must share one dimension");
  const int k = static_cast<int>(n) - 1, r = static_cast<int>(pts.size());
  const int N = ipow(k + 1, r);
  ZVec out(N);
  for (int f = 0; f < N; ++f) {
    const std::vector<int> idx = segre_multi_index(f, k, r);
    mpz_class v = 1;
    for (int j = 0; j < r; ++j) v *= pts[static_cast<std::size_t>(j)](idx[static_cast<std::size_t>(j)]);
    out(f) = v;
  }
  return out;
}

ProjectivePoint segre_embed(const std::vector<ProjectivePoint>& pts) {
  std::vector<ZVec> z;
  for (const ProjectivePoint& p : pts) z.push_back(p.integer_coords());
  return ProjectivePoint(segre(z));
}

int SegreEquations::max_degree() const {
  int d = 0;
  for (const auto& f : substituted) d = std::max(d, f.degree());
  for (const auto& f : relations) d = std::max(d, f.degree());
  return d;
}

std::vector<HomogeneousPolynomial> SegreEquations::all() const {
  std::vector<HomogeneousPolynomial> v = substituted;
  v.insert(v.end(), relations.begin(), relations.end());
  return v;
}

SegreEquations segre_pushforward_equations(const HomogeneousPolynomial& F, int k, int r) {
  if (k < 1 || r < 1) throw error(errc::shape_mismatch, "need k >= 1 and r >= 1");
  if (F.block_sizes() != std::vector<int>(static_cast<std::size_t>(r), k + 1))
    throw error(errc::shape_mismatch, "form must have " + std::to_string(r) + " blocks of " + std::to_string(k + 1) +
                                          " variables");
  const int N = ipow(k + 1, r);
  const int total = F.degree();
  SegreEquations out;
  out.k = k;
  out.r = r;
  for (int f = 0; f < N; ++f) {
    const std::vector<int> I = segre_multi_index(f, k, r);
    HomogeneousPolynomial G(N, total);
    for (const auto& [e, c] : F.terms()) {
      Exponent z(static_cast<std::size_t>(N), 0);
      for (int j = 0; j < r; ++j)
        for (int a = 0; a <= k; ++a) {
          const int pw = e[static_cast<std::size_t>(j * (k + 1) + a)];
          if (pw == 0) continue;
          std::vector<int> J = I;
          J[static_cast<std::size_t>(j)] = a;
          z[static_cast<std::size_t>(segre_flat_index(J, k))] += pw;
        }
      G.add_term(z, c);
    }
    out.substituted.push_back(std::move(G));
  }
  // Z_I Z_J = Z_K Z_L where K, L swap one position of I and J
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> seen;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      const std::vector<int> I = segre_multi_index(a, k, r), J = segre_multi_index(b, k, r);
      for (int j = 0; j < r; ++j) {
        if (I[static_cast<std::size_t>(j)] == J[static_cast<std::size_t>(j)]) continue;
        std::vector<int> K = I, L = J;
        std::swap(K[static_cast<std::size_t>(j)], L[static_cast<std::size_t>(j)]);
        int kf = segre_flat_index(K, k), lf = segre_flat_index(L, k);
        if (kf > lf) std::swap(kf, lf);
        if (std::make_pair(kf, lf) == std::make_pair(a, b)) continue;
        auto lhs = std::make_pair(a, b), rhs = std::make_pair(kf, lf);
        if (rhs < lhs) std::swap(lhs, rhs);
        if (!seen.insert({lhs, rhs}).second) continue;
        HomogeneousPolynomial q(N, 2);
        Exponent e1(static_cast<std::size_t>(N), 0), e2(static_cast<std::size_t>(N), 0);
        e1[static_cast<std::size_t>(a)] += 1;
        e1[static_cast<std::size_t>(b)] += 1;
        e2[static_cast<std::size_t>(kf)] += 1;
        e2[static_cast<std::size_t>(lf)] += 1;
        q.add_term(e1, 1).add_term(e2, -1);
        out.relations.push_back(std::move(q));
      }
    }
  return out;
}

}  // namespace effbounds::geom
