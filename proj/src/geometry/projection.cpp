#include "effbounds/geometry/projection.hpp"

#include <set>

#include "effbounds/error.hpp"
#include "effbounds/geometry/linalg.hpp"

namespace effbounds::geom {

ZVec veronese(const ZVec& x, int l) {
  if (l < 1) throw error(errc::invalid_params, "Veronese degree must be >= 1");
  const auto& mons = monomials(static_cast<int>(x.size()), l);
  ZVec out(static_cast<Eigen::Index>(mons.size()));
  for (std::size_t i = 0; i < mons.size(); ++i) out(static_cast<Eigen::Index>(i)) = monomial_value(mons[i], x);
  return out;
}

ProjectivePoint veronese_embed(const ProjectivePoint& pt, int l) { return ProjectivePoint(veronese(pt.integer_coords(), l)); }

ZVec PerturbedVeronese::apply(const ZVec& x) const {
  QVec xq = to_qvec(x);
  QVec out(static_cast<Eigen::Index>(forms.size()));
  for (std::size_t i = 0; i < forms.size(); ++i) out(static_cast<Eigen::Index>(i)) = forms[i].evaluate(xq);
  return primitive(out);
}

namespace {

std::vector<ZVec> fixed_samples(int m) {
  Rng rng(0x5eedf00dULL);
  std::vector<ZVec> pts;
  while (pts.size() < 20) {
    ZVec v(m + 1);
    for (Eigen::Index i = 0; i <= m; ++i) v(i) = rng.uniform(-5, 5);
    if (is_zero(v)) continue;
    v = primitive(v);
    bool fresh = true;
    for (const ZVec& p : pts) fresh = fresh && !projectively_equal(p, v);
    if (fresh) pts.push_back(v);
  }
  return pts;
}

void check_forms(const PerturbedVeronese& pv) {
  const auto& mons = monomials(pv.m + 1, pv.l);
  QMat coeff(static_cast<Eigen::Index>(pv.forms.size()), static_cast<Eigen::Index>(mons.size()));
  for (std::size_t i = 0; i < pv.forms.size(); ++i)
    for (std::size_t j = 0; j < mons.size(); ++j) {
      auto it = pv.forms[i].terms().find(mons[j]);
      coeff(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = it == pv.forms[i].terms().end() ? 0 : it->second;
    }
  const ZMat Z = integer_rows(coeff);
  const int full = static_cast<int>(mons.size());
  if (rank_mod_p(Z) < full && bareiss(Z).rank() < full)
    throw error(errc::perturbation_rejected, "perturbed forms are linearly dependent");
  std::vector<ZVec> images;
  for (const ZVec& p : fixed_samples(pv.m)) {
    ZVec img = pv.apply(p);
    if (is_zero(img))
      throw error(errc::perturbation_rejected, "a sample point maps to zero");
    for (const ZVec& q : images)
      if (projectively_equal(q, img))
        throw error(errc::perturbation_rejected,
                    "two sample points share an image");
    images.push_back(img);
  }
}

}  // namespace

PerturbedVeronese perturbed_forms(int l, int m, const mpq_class& epsilon, const std::vector<HomogeneousPolynomial>& noise) {
  const auto& mons = monomials(m + 1, l);
  if (noise.size() != mons.size()) throw error(errc::shape_mismatch, "need one noise form per monomial");
  PerturbedVeronese pv;
  pv.l = l;
  pv.m = m;
  pv.epsilon = epsilon;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    HomogeneousPolynomial f(m + 1, l);
    f.add_term(mons[i], 1);
    pv.forms.push_back(sum(f, scaled(noise[i], epsilon)));
  }
  check_forms(pv);
  return pv;
}

PerturbedVeronese perturb_veronese(int l, int m, std::uint64_t seed, const mpq_class& epsilon) {
  if (l < 1 || m < 1) throw error(errc::invalid_params, "need l >= 1 and m >= 1");
  Rng rng(seed);
  std::vector<HomogeneousPolynomial> noise;
  for (std::size_t i = 0; i < monomials(m + 1, l).size(); ++i) noise.push_back(random_form(m + 1, l, rng, 9, 9));
  try {
    PerturbedVeronese pv = perturbed_forms(l, m, epsilon, noise);
    pv.seed = seed;
    return pv;
  } catch (const error& e) {
    throw error(e.code(), std::string(e.what()) + " (seed " + std::to_string(seed) + ")");
  }
}

std::vector<LinearProjection> build_projections(int M, int count, const std::vector<long>& betas) {
  if (M < 3) throw error(errc::invalid_params, "projections need M >= 3, got " + std::to_string(M));
  if (count < 0 || static_cast<std::size_t>(count) > betas.size())
    throw error(errc::invalid_params, "asked for " + std::to_string(count) + " projections but only " +
                                          std::to_string(betas.size()) + " betas given");
  std::set<long> seen;
  for (int i = 0; i < count; ++i) {
    const long b = betas[static_cast<std::size_t>(i)];
    if (b <= 0) throw error(errc::invalid_betas, "betas must be positive, got " + std::to_string(b));
    if (!seen.insert(b).second) throw error(errc::invalid_betas, "repeated beta " + std::to_string(b));
  }
  std::vector<LinearProjection> out;
  for (int i = 0; i < count; ++i) {
    LinearProjection pi;
    pi.beta = betas[static_cast<std::size_t>(i)];
    pi.rows = ZMat::Constant(3, M + 1, mpz_class(0));
    pi.rows(0, 0) = 1;
    pi.rows(2, 2) = 1;
    mpz_class p = 1;
    for (int a = 1; a <= M; ++a) {
      p *= pi.beta;
      pi.rows(1, a) = p;
    }
    out.push_back(std::move(pi));
  }
  return out;
}

ZVec apply_projection(const ZVec& x, const LinearProjection& pi) {
  if (x.size() != pi.rows.cols())
    throw error(errc::shape_mismatch, "point in P^" + std::to_string(x.size() - 1) + " but projection from P^" +
                                          std::to_string(pi.source_dim()));
  ZVec y(3);
  for (Eigen::Index r = 0; r < 3; ++r) y(r) = dot(pi.rows, r, x);
  return y;
}

ProjectivePoint apply_projection(const ProjectivePoint& pt, const LinearProjection& pi) {
  ZVec y = apply_projection(pt.integer_coords(), pi);
  if (is_zero(y)) throw error(errc::in_light_source, "point " + pt.to_string() + " lies in the light source");
  return ProjectivePoint(primitive(y));
}

mpz_class nondegeneracy_determinant(const std::vector<long>& betas) {
  const auto M = static_cast<Eigen::Index>(betas.size());
  ZMat V(M, M);
  for (Eigen::Index e = 0; e < M; ++e) {
    mpz_class p = 1;
    for (Eigen::Index a = 0; a < M; ++a) {
      p *= betas[static_cast<std::size_t>(e)];
      V(e, a) = p;
    }
  }
  return determinant(V);
}

mpz_class dual_degree_transversality_budget(const mpz_class& delta0, const mpz_class& M) {
  if (delta0 < 1 || M < 3) throw error(errc::invalid_params, "need delta0 >= 1 and M >= 3");
  const mpz_class top = 4 * delta0 + M;
  if (!top.fits_ulong_p() || !M.fits_ulong_p()) throw error(errc::capacity_exceeded, "budget arguments too large");
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), top.get_ui(), M.get_ui());
  return r;
}

}  // namespace effbounds::geom
