#include "torelli/derivations.hpp"

#include <algorithm>
#include <mutex>

#include "torelli/error.hpp"
#include "torelli/fox.hpp"

namespace torelli {

GradedDerivation::GradedDerivation(std::size_t rank, std::size_t degree) : rank_(rank), degree_(degree) {
  for (std::size_t i = 0; i < rank; ++i) images_.push_back(LieElement::zero(rank, degree + 1));
}

GradedDerivation::GradedDerivation(std::size_t rank, std::size_t degree, std::vector<LieElement> images)
    : rank_(rank), degree_(degree), images_(std::move(images)) {
  if (images_.size() != rank_) throw PreconditionError("derivation", "need one image per generator");
  for (auto& im : images_) {
    if (im.rank() != rank_) throw PreconditionError("derivation", "image rank mismatch");
    if (im.is_zero()) im = LieElement::zero(rank_, degree_ + 1);
    if (im.degree() != degree_ + 1)
      throw PreconditionError("derivation", "image of degree " + std::to_string(im.degree()) + " in a degree " +
                                                std::to_string(degree_) + " derivation");
  }
}

bool GradedDerivation::is_zero() const {
  return std::all_of(images_.begin(), images_.end(), [](const LieElement& e) { return e.is_zero(); });
}

std::size_t derivation_space_dim(std::size_t n, std::size_t s) { return n * witt_dimension(n, s + 1); }

linalg::SparseVector<Rational> GradedDerivation::coordinates() const {
  const std::size_t block = witt_dimension(rank_, degree_ + 1);
  linalg::SparseVector<Rational> v;
  for (std::size_t i = 0; i < rank_; ++i)
    for (const auto& [k, c] : images_[i].coeffs()) v.emplace_back(i * block + k, c);
  return v;
}

GradedDerivation GradedDerivation::from_coordinates(std::size_t rank, std::size_t degree,
                                                    const linalg::SparseVector<Rational>& v) {
  const std::size_t block = witt_dimension(rank, degree + 1);
  std::vector<linalg::SparseVector<Rational>> parts(rank);
  for (const auto& [k, c] : v) {
    if (k >= rank * block) throw PreconditionError("derivation", "coordinate beyond Der^s");
    parts[k / block].emplace_back(k % block, c);
  }
  std::vector<LieElement> images;
  for (auto& p : parts) images.emplace_back(rank, degree + 1, std::move(p));
  return GradedDerivation(rank, degree, std::move(images));
}

GradedDerivation& GradedDerivation::operator+=(const GradedDerivation& o) {
  if (rank_ != o.rank_ || degree_ != o.degree_) throw PreconditionError("derivation", "rank or degree mismatch");
  for (std::size_t i = 0; i < rank_; ++i) images_[i] += o.images_[i];
  return *this;
}

GradedDerivation operator-(const GradedDerivation& a, const GradedDerivation& b) {
  return a + Rational(-1) * b;
}

GradedDerivation operator*(const Rational& c, const GradedDerivation& d) {
  GradedDerivation r = d;
  for (auto& im : r.images_) im = c * im;
  return r;
}

LieElement derivation_apply(const GradedDerivation& d, const LieElement& a) {
  if (d.rank() != a.rank()) throw PreconditionError("derivation", "rank mismatch");
  const std::size_t out_degree = a.degree() + d.degree();
  if (a.is_zero()) return LieElement::zero(a.rank(), out_degree);
  std::vector<Tensor> gen;
  for (const auto& im : d.images()) gen.push_back(im.to_tensor());
  Tensor out;
  for (const auto& [w, c] : a.to_tensor()) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      const Tensor& g = gen[w[k] - 1];
      if (g.empty()) continue;
      Tensor left{{std::vector<int>(w.begin(), w.begin() + k), Rational(1)}};
      Tensor right{{std::vector<int>(w.begin() + k + 1, w.end()), Rational(1)}};
      tensor_axpy(out, c, tensor_product(tensor_product(left, g), right));
    }
  }
  return lie_from_tensor(a.rank(), out_degree, out);
}

GradedDerivation ad(const LieElement& a) {
  const std::size_t n = a.rank();
  std::vector<LieElement> images;
  for (std::size_t i = 1; i <= n; ++i) images.push_back(bracket(a, LieElement::generator(n, static_cast<int>(i))));
  return GradedDerivation(n, a.degree(), std::move(images));
}

const LieElement& ev(const GradedDerivation& d, std::size_t i) {
  if (i < 1 || i > d.rank()) throw PreconditionError("ev", "index " + std::to_string(i) + " out of range");
  return d.images()[i - 1];
}

GradedDerivation johnson_image(const Endo& alpha, std::size_t s) {
  if (s == 0) throw PreconditionError("johnson-image", "degree must be positive");
  const std::size_t level = johnson_filtration_degree(alpha, s);
  if (level < s)
    throw PreconditionError("johnson-image", "automorphism lies in F^" + std::to_string(level) + ", not F^" +
                                                 std::to_string(s));
  const std::size_t n = alpha.rank();
  std::vector<LieElement> images;
  for (std::size_t i = 1; i <= n; ++i) {
    const Word x = Word::generator(n, static_cast<int>(i));
    images.push_back(magnus_class(alpha.apply(x) * x.inverse(), s + 1));
  }
  return GradedDerivation(n, s, std::move(images));
}

LieElement lie_embed(const LieElement& a, std::size_t rank) {
  if (rank < a.rank()) throw PreconditionError("lie-embed", "target rank below source rank");
  return lie_from_tensor(rank, a.degree(), a.to_tensor());
}

Endo psi_section(const LyndonWord& w, std::size_t n) {
  if (w.size() == 1) {
    if (w[0] < 1 || static_cast<std::size_t>(w[0]) >= n) throw PreconditionError("psi", "letter outside 1..n-1");
    return magnus_gen(MagnusGenerator::conj(static_cast<int>(n), w[0]), n);
  }
  const auto [u, v] = standard_factorization(w);
  return commutator(psi_section(u, n), psi_section(v, n));
}

GradedDerivation psi_image(const LieElement& w, std::size_t s) {
  const std::size_t n = w.rank() + 1;
  if (!w.is_zero() && w.degree() != s)
    throw PreconditionError("psi", "element of degree " + std::to_string(w.degree()) + " with requested degree " +
                                       std::to_string(s));
  GradedDerivation out(n, s);
  if (w.is_zero()) return out;
  const auto& words = lyndon_basis(w.rank(), s);
  for (const auto& [k, c] : w.coeffs()) out += c * johnson_image(psi_section(words[k], n), s);
  return out;
}

namespace {

struct OrthoBasis {
  std::vector<linalg::SparseVector<Rational>> u;
  std::vector<Rational> norms;
};

// Orthogonal basis of im(ad) in Der^s (Gram-Schmidt over Q), cached.
const OrthoBasis& inner_orthobasis(std::size_t n, std::size_t s) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, OrthoBasis> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({n, s});
    if (it != cache.end()) return it->second;
  }
  OrthoBasis b;
  for (const auto& w : lyndon_basis(n, s)) {
    linalg::SparseVector<Rational> v = ad(LieElement::basis(n, w)).coordinates();
    for (std::size_t j = 0; j < b.u.size(); ++j) {
      const Rational f = linalg::dot(v, b.u[j]) / b.norms[j];
      if (!is_zero(f)) v = linalg::axpy(v, Rational(-f), b.u[j]);
    }
    if (v.empty()) continue;
    b.norms.push_back(linalg::dot(v, v));
    b.u.push_back(std::move(v));
  }
  std::lock_guard lock(mu);
  return cache.try_emplace({n, s}, std::move(b)).first->second;
}

}  // namespace

OuterDerivationClass outer_reduce(const GradedDerivation& d) {
  const OrthoBasis& b = inner_orthobasis(d.rank(), d.degree());
  linalg::SparseVector<Rational> v = d.coordinates();
  for (std::size_t j = 0; j < b.u.size(); ++j) {
    const Rational f = linalg::dot(v, b.u[j]) / b.norms[j];
    if (!is_zero(f)) v = linalg::axpy(v, Rational(-f), b.u[j]);
  }
  return {d, std::move(v)};
}

linalg::IntMatrix ad_matrix(std::size_t n, std::size_t s) {
  const auto& basis = lyndon_basis(n, s);
  linalg::IntMatrix m(basis.size(), derivation_space_dim(n, s));
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (const auto& [c, x] : ad(LieElement::basis(n, basis[r])).coordinates()) {
      if (x.get_den() != 1) throw VerificationFailure("ad-matrix", "non-integral ad coefficient");
      m.set(r, c, x.get_num());
    }
  return m;
}

std::size_t pettet_rank(std::size_t n) {
  linalg::EchelonBasis<Rational> e(derivation_space_dim(n, 1));
  for (const auto& g : all_magnus_generators(n)) e.insert(johnson_image(magnus_gen(g, n), 1).coordinates());
  return e.rank();
}

std::size_t inner_rank(std::size_t n, std::size_t s) { return inner_orthobasis(n, s).u.size(); }

PsiCheck psi_check(std::size_t n, std::size_t s) {
  if (n < 2) throw PreconditionError("psi-check", "need n >= 2");
  PsiCheck out;
  out.n = n;
  out.s = s;
  const auto& words = lyndon_basis(n - 1, s);
  out.basis_size = words.size();
  const LieElement xn = LieElement::generator(n, static_cast<int>(n));
  const std::size_t dim = derivation_space_dim(n, s);
  linalg::EchelonBasis<Rational> psi_span(dim), joint(dim);
  linalg::EchelonBasis<Rational> evn_span(witt_dimension(n, s + 1));
  int sign = 0;
  bool consistent = true;
  for (const auto& w : words) {
    const LieElement lw = LieElement::basis(n - 1, w);
    const GradedDerivation p = psi_image(lw, s);
    for (std::size_t i = 1; i < n; ++i)
      if (!ev(p, i).is_zero()) out.lower_evaluations_vanish = false;
    const LieElement target = bracket(xn, lie_embed(lw, n));
    const LieElement& got = ev(p, n);
    int here = 0;
    if (got == target) here = 1;
    else if (got == -target) here = -1;
    if (here == 0 || (sign != 0 && here != sign)) consistent = false;
    if (sign == 0) sign = here;
    psi_span.insert(p.coordinates());
    joint.insert(p.coordinates());
    evn_span.insert(got.coeffs());
    if (outer_reduce(p).is_zero()) out.outer_nonzero = false;
  }
  out.sign = consistent ? sign : 0;
  for (const auto& w : lyndon_basis(n, s)) joint.insert(ad(LieElement::basis(n, w)).coordinates());
  out.rank_psi = psi_span.rank();
  out.rank_ad = inner_rank(n, s);
  out.rank_joint = joint.rank();
  out.rank_ev_n = evn_span.rank();
  return out;
}

}  // namespace torelli
