#include "effbounds/geometry/polynomial.hpp"

#include <mutex>
#include <numeric>

#include "effbounds/error.hpp"

namespace effbounds::geom {

namespace {

void fill(int nvars, int left, Exponent& cur, int pos, std::vector<Exponent>& out) {
  if (pos == nvars - 1) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (int a = left; a >= 0; --a) {
    cur[pos] = a;
    fill(nvars, left - a, cur, pos + 1, out);
  }
}

}  // namespace

const std::vector<Exponent>& monomials(int nvars, int degree) {
  static std::map<std::pair<int, int>, std::vector<Exponent>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace({nvars, degree});
  if (fresh && nvars > 0 && degree >= 0) {
    Exponent cur(static_cast<std::size_t>(nvars), 0);
    fill(nvars, degree, cur, 0, it->second);
  }
  return it->second;
}

mpq_class monomial_value(const Exponent& e, const QVec& x) {
  mpq_class r = 1, p;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    const auto k = static_cast<unsigned long>(e[i]);
    mpz_pow_ui(p.get_num_mpz_t(), x(static_cast<Eigen::Index>(i)).get_num_mpz_t(), k);
    mpz_pow_ui(p.get_den_mpz_t(), x(static_cast<Eigen::Index>(i)).get_den_mpz_t(), k);
    r *= p;
  }
  return r;
}

mpz_class monomial_value(const Exponent& e, const ZVec& x) {
  mpz_class r = 1, p;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    mpz_pow_ui(p.get_mpz_t(), x(static_cast<Eigen::Index>(i)).get_mpz_t(), static_cast<unsigned long>(e[i]));
    r *= p;
  }
  return r;
}

HomogeneousPolynomial::HomogeneousPolynomial(int nvars, int degree)
    : nvars_(nvars), blocks_{nvars}, degrees_{degree} {
  if (nvars < 1 || degree < 0) throw error(errc::shape_mismatch, "polynomial needs >= 1 variable and degree >= 0");
}

HomogeneousPolynomial::HomogeneousPolynomial(std::vector<int> block_sizes, std::vector<int> degrees)
    : nvars_(std::accumulate(block_sizes.begin(), block_sizes.end(), 0)),
      blocks_(std::move(block_sizes)),
      degrees_(std::move(degrees)) {
  if (blocks_.size() != degrees_.size() || blocks_.empty())
    throw error(errc::shape_mismatch, "block sizes and multidegree differ in length");
  for (std::size_t j = 0; j < blocks_.size(); ++j)
    if (blocks_[j] < 1 || degrees_[j] < 0) throw error(errc::shape_mismatch, "bad block or degree");
}

int HomogeneousPolynomial::degree() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

HomogeneousPolynomial& HomogeneousPolynomial::add_term(const Exponent& e, const mpq_class& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw error(errc::shape_mismatch, "exponent has " + std::to_string(e.size()) + " entries, expected " +
                                          std::to_string(nvars_));
  std::size_t at = 0;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    int d = 0;
    for (int i = 0; i < blocks_[j]; ++i, ++at) {
      if (e[at] < 0) throw error(errc::shape_mismatch, "negative exponent");
      d += e[at];
    }
    if (d != degrees_[j])
      throw error(errc::shape_mismatch, "term of degree " + std::to_string(d) + " in block " + std::to_string(j) +
                                            ", expected " + std::to_string(degrees_[j]));
  }
  if (c == 0) return *this;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

mpq_class HomogeneousPolynomial::evaluate(const QVec& x) const {
  if (x.size() != nvars_) throw error(errc::shape_mismatch, "point has the wrong number of coordinates");
  mpq_class s = 0;
  for (const auto& [e, c] : terms_) s += c * monomial_value(e, x);
  return s;
}

mpz_class HomogeneousPolynomial::evaluate(const ZVec& x) const {
  if (x.size() != nvars_) throw error(errc::shape_mismatch, "point has the wrong number of coordinates");
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) {
    if (c.get_den() != 1) throw error(errc::shape_mismatch, "integer evaluation of a non-integral form");
    s += c.get_num() * monomial_value(e, x);
  }
  return s;
}

std::string HomogeneousPolynomial::to_string() const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += "; ";
    out += "{";
    for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
    out += "}->" + c.get_str();
  }
  return out.empty() ? "0" : out;
}

HomogeneousPolynomial scaled(const HomogeneousPolynomial& f, const mpq_class& c) {
  HomogeneousPolynomial g(f.block_sizes(), f.multidegree());
  for (const auto& [e, v] : f.terms()) g.add_term(e, v * c);
  return g;
}

HomogeneousPolynomial sum(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
  if (a.block_sizes() != b.block_sizes() || a.multidegree() != b.multidegree())
    throw error(errc::shape_mismatch, "adding forms of different shapes");
  HomogeneousPolynomial g = a;
  for (const auto& [e, v] : b.terms()) g.add_term(e, v);
  return g;
}

HomogeneousPolynomial random_form(int nvars, int degree, Rng& rng, long num_bound, long den_bound) {
  HomogeneousPolynomial f(nvars, degree);
  for (const Exponent& e : monomials(nvars, degree)) f.add_term(e, rng.rational(num_bound, den_bound));
  return f;
}

}  // namespace effbounds::geom
