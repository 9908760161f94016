#include "torelli/free_lie.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "torelli/error.hpp"

namespace torelli {

bool is_lyndon(const LyndonWord& w) {
  if (w.empty()) return false;
  // strictly smaller than every proper rotation
  for (std::size_t r = 1; r < w.size(); ++r) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      const int a = w[k], b = w[(k + r) % w.size()];
      if (a < b) break;
      if (a > b) return false;
      if (k + 1 == w.size()) return false;  // periodic
    }
  }
  return true;
}

namespace {

struct BasisEntry {
  std::vector<LyndonWord> words;
  std::map<LyndonWord, std::size_t> index;
};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::size_t, std::size_t>, BasisEntry>& basis_cache() {
  static std::map<std::pair<std::size_t, std::size_t>, BasisEntry> c;
  return c;
}

std::map<std::pair<std::size_t, LyndonWord>, Tensor>& tensor_cache() {
  static std::map<std::pair<std::size_t, LyndonWord>, Tensor> c;
  return c;
}

// Duval's algorithm; emits Lyndon words of length <= s in lexicographic order.
std::vector<LyndonWord> enumerate_lyndon(std::size_t n, std::size_t s) {
  std::vector<LyndonWord> out;
  std::vector<int> w{0};
  while (!w.empty()) {
    ++w.back();
    const std::size_t m = w.size();
    if (m == s) out.push_back(w);
    while (w.size() < s) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == static_cast<int>(n)) w.pop_back();
  }
  return out;
}

const BasisEntry& basis_entry(std::size_t n, std::size_t s) {
  if (n == 0 || s == 0) throw PreconditionError("lyndon", "rank and degree must be positive");
  std::lock_guard lock(cache_mutex());
  auto& c = basis_cache();
  auto it = c.find({n, s});
  if (it != c.end()) return it->second;
  BasisEntry e;
  e.words = enumerate_lyndon(n, s);
  for (std::size_t i = 0; i < e.words.size(); ++i) e.index.emplace(e.words[i], i);
  return c.emplace(std::make_pair(n, s), std::move(e)).first->second;
}

}  // namespace

const std::vector<LyndonWord>& lyndon_basis(std::size_t n, std::size_t s) { return basis_entry(n, s).words; }

std::size_t lyndon_index(std::size_t n, const LyndonWord& w) {
  const auto& e = basis_entry(n, w.size());
  auto it = e.index.find(w);
  if (it == e.index.end()) throw PreconditionError("lyndon", "word is not a Lyndon word over 1.." + std::to_string(n));
  return it->second;
}

std::size_t witt_dimension(std::size_t n, std::size_t s) {
  if (n == 0 || s == 0) throw PreconditionError("witt", "rank and degree must be positive");
  auto mobius = [](std::size_t d) {
    int mu = 1;
    for (std::size_t p = 2; p * p <= d; ++p) {
      if (d % p) continue;
      d /= p;
      if (d % p == 0) return 0;
      mu = -mu;
    }
    if (d > 1) mu = -mu;
    return mu;
  };
  Integer total = 0;
  for (std::size_t d = 1; d <= s; ++d) {
    if (s % d) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), n, s / d);
    total += mu * p;
  }
  total /= static_cast<unsigned long>(s);
  return total.get_ui();
}

std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w) {
  if (w.size() < 2) throw PreconditionError("lyndon", "standard factorization needs length >= 2");
  for (std::size_t k = 1; k < w.size(); ++k) {
    LyndonWord v(w.begin() + k, w.end());
    if (is_lyndon(v)) return {LyndonWord(w.begin(), w.begin() + k), std::move(v)};
  }
  throw VerificationFailure("lyndon", "no Lyndon suffix");  // a letter is always Lyndon
}

std::string bracketing_string(const LyndonWord& w) {
  if (w.size() == 1) return std::to_string(w[0]);
  const auto [u, v] = standard_factorization(w);
  return "[" + bracketing_string(u) + "," + bracketing_string(v) + "]";
}

void tensor_axpy(Tensor& y, const Rational& c, const Tensor& x) {
  if (is_zero(c)) return;
  for (const auto& [w, a] : x) {
    auto [it, fresh] = y.try_emplace(w, c * a);
    if (!fresh) {
      it->second += c * a;
      if (is_zero(it->second)) y.erase(it);
    }
  }
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  Tensor out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      std::vector<int> w = u;
      w.insert(w.end(), v.begin(), v.end());
      auto [it, fresh] = out.try_emplace(std::move(w), x * y);
      if (!fresh) it->second += x * y;
    }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

Tensor tensor_commutator(const Tensor& a, const Tensor& b) {
  Tensor t = tensor_product(a, b);
  tensor_axpy(t, Rational(-1), tensor_product(b, a));
  return t;
}

const Tensor& lyndon_tensor(std::size_t n, const LyndonWord& w) {
  {
    std::lock_guard lock(cache_mutex());
    auto it = tensor_cache().find({n, w});
    if (it != tensor_cache().end()) return it->second;
  }
  Tensor t;
  if (w.size() == 1) {
    t.emplace(w, Rational(1));
  } else {
    const auto [u, v] = standard_factorization(w);
    t = tensor_commutator(lyndon_tensor(n, u), lyndon_tensor(n, v));
  }
  std::lock_guard lock(cache_mutex());
  return tensor_cache().try_emplace({n, w}, std::move(t)).first->second;
}

LieElement::LieElement(std::size_t rank, std::size_t degree, linalg::SparseVector<Rational> coeffs)
    : rank_(rank), degree_(degree), coeffs_(std::move(coeffs)) {
  linalg::canonicalize(coeffs_);
}

LieElement LieElement::basis(std::size_t rank, const LyndonWord& w, const Rational& c) {
  return LieElement(rank, w.size(), {{lyndon_index(rank, w), c}});
}

LieElement LieElement::generator(std::size_t rank, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > rank) throw PreconditionError("lie", "generator index out of range");
  return basis(rank, {i});
}

Rational LieElement::coefficient(const LyndonWord& w) const {
  if (w.size() != degree_) return 0;
  const Rational* p = linalg::lookup(coeffs_, lyndon_index(rank_, w));
  return p ? *p : Rational(0);
}

Tensor LieElement::to_tensor() const {
  Tensor t;
  if (coeffs_.empty()) return t;
  const auto& words = lyndon_basis(rank_, degree_);
  for (const auto& [i, c] : coeffs_) tensor_axpy(t, c, lyndon_tensor(rank_, words[i]));
  return t;
}

void LieElement::check_compatible(const LieElement& o) const {
  if (rank_ != o.rank_) throw PreconditionError("lie", "rank mismatch");
  if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
    throw PreconditionError("lie", "sum of different degrees " + std::to_string(degree_) + " and " +
                                       std::to_string(o.degree_));
}

LieElement& LieElement::operator+=(const LieElement& o) {
  check_compatible(o);
  if (is_zero()) degree_ = o.degree_;
  coeffs_ = linalg::axpy(coeffs_, Rational(1), o.coeffs_);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) { return *this += -o; }

LieElement LieElement::operator-() const {
  LieElement r = *this;
  for (auto& [i, c] : r.coeffs_) c = -c;
  return r;
}

LieElement operator*(const Rational& c, LieElement a) {
  linalg::scale(a.coeffs_, c);
  return a;
}

std::string LieElement::to_string() const {
  if (coeffs_.empty()) return "0";
  const auto& words = lyndon_basis(rank_, degree_);
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str() << "*";
    const std::string b = bracketing_string(words[i]);
    os << (degree_ == 1 ? "x" + b : b);
    first = false;
  }
  return os.str();
}

LieElement lie_from_tensor(std::size_t rank, std::size_t degree, const Tensor& t) {
  Tensor r = t;
  linalg::SparseVector<Rational> coeffs;
  while (!r.empty()) {
    const auto [w, c] = *r.begin();
    if (w.size() != degree) throw VerificationFailure("lie", "tensor is not homogeneous of degree " + std::to_string(degree));
    if (!is_lyndon(w)) throw VerificationFailure("lie", "tensor is not a Lie polynomial");
    coeffs.emplace_back(lyndon_index(rank, w), c);
    tensor_axpy(r, Rational(-c), lyndon_tensor(rank, w));
  }
  return LieElement(rank, degree, std::move(coeffs));
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  if (a.rank() != b.rank()) throw PreconditionError("lie", "rank mismatch");
  const std::size_t d = a.degree() + b.degree();
  if (a.is_zero() || b.is_zero()) return LieElement::zero(a.rank(), d);
  return lie_from_tensor(a.rank(), d, tensor_commutator(a.to_tensor(), b.to_tensor()));
}

MagnusSeries::MagnusSeries(std::size_t rank, std::size_t degree) : rank_(rank), degree_(degree) {
  if (degree > kMaxMagnusDegree)
    throw ResourceLimit("magnus", "truncation degree " + std::to_string(degree) + " exceeds cap " +
                                      std::to_string(kMaxMagnusDegree));
  std::size_t size = 1;
  parts_.resize(degree + 1);
  for (std::size_t d = 0; d <= degree; ++d) {
    parts_[d].assign(size, Integer(0));
    size *= rank;
  }
  parts_[0][0] = 1;
}

MagnusSeries MagnusSeries::of(const Word& w, std::size_t degree) {
  MagnusSeries s(w.rank(), degree);
  for (int a : w.letters()) s.multiply_letter(a);
  return s;
}

void MagnusSeries::multiply_letter(int letter) {
  const std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
  if (i >= rank_) throw PreconditionError("magnus", "letter out of range");
  if (letter > 0) {
    // S_d += S_{d-1} X_i, reading old lower parts: go downwards
    for (std::size_t d = degree_; d >= 1; --d) {
      auto& hi = parts_[d];
      const auto& lo = parts_[d - 1];
      for (std::size_t u = 0; u < lo.size(); ++u)
        if (!torelli::is_zero(lo[u])) hi[u * rank_ + i] += lo[u];
    }
  } else {
    // S'(1+X_i) = S, so S'_d = S_d - S'_{d-1} X_i: go upwards
    for (std::size_t d = 1; d <= degree_; ++d) {
      auto& hi = parts_[d];
      const auto& lo = parts_[d - 1];
      for (std::size_t u = 0; u < lo.size(); ++u)
        if (!torelli::is_zero(lo[u])) hi[u * rank_ + i] -= lo[u];
    }
  }
}

const Integer& MagnusSeries::coefficient(const std::vector<int>& word) const {
  if (word.size() > degree_) throw ResourceLimit("magnus", "coefficient beyond truncation degree");
  std::size_t idx = 0;
  for (int a : word) {
    if (a < 1 || static_cast<std::size_t>(a) > rank_) throw PreconditionError("magnus", "letter out of range");
    idx = idx * rank_ + static_cast<std::size_t>(a - 1);
  }
  return parts_[word.size()][idx];
}

Tensor MagnusSeries::part(std::size_t d) const {
  if (d > degree_) throw ResourceLimit("magnus", "part beyond truncation degree");
  Tensor t;
  const auto& p = parts_[d];
  for (std::size_t idx = 0; idx < p.size(); ++idx) {
    if (torelli::is_zero(p[idx])) continue;
    std::vector<int> w(d);
    std::size_t x = idx;
    for (std::size_t k = d; k-- > 0;) {
      w[k] = static_cast<int>(x % rank_) + 1;
      x /= rank_;
    }
    t.emplace(std::move(w), Rational(p[idx]));
  }
  return t;
}

bool MagnusSeries::vanishes_in_degree(std::size_t d) const {
  const auto& p = parts_.at(d);
  return std::all_of(p.begin(), p.end(), [](const Integer& x) { return torelli::is_zero(x); });
}

std::optional<std::size_t> magnus_lowest_degree(const Word& w, std::size_t cap) {
  if (w.empty() || cap == 0) return std::nullopt;
  const MagnusSeries s = MagnusSeries::of(w, cap);
  for (std::size_t d = 1; d <= cap; ++d)
    if (!s.vanishes_in_degree(d)) return d;
  return std::nullopt;
}

bool gamma_membership(const Word& w, std::size_t s) {
  if (s <= 1 || w.empty()) return true;
  return !magnus_lowest_degree(w, s - 1).has_value();
}

LieElement magnus_class(const Word& w, std::size_t s) {
  if (s == 0) throw PreconditionError("magnus-class", "degree must be positive");
  if (w.empty()) return LieElement::zero(w.rank(), s);
  const MagnusSeries series = MagnusSeries::of(w, s);
  for (std::size_t d = 1; d < s; ++d)
    if (!series.vanishes_in_degree(d))
      throw PreconditionError("magnus-class", "word " + w.to_string() + " lies in Γ^" + std::to_string(d) +
                                                  " but not Γ^" + std::to_string(d + 1) + ", below requested " +
                                                  std::to_string(s));
  return lie_from_tensor(w.rank(), s, series.part(s));
}

bool center_check(std::size_t n, std::size_t s_max) {
  for (std::size_t s = 1; s <= s_max; ++s) {
    const auto& basis = lyndon_basis(n, s);
    const std::size_t target = witt_dimension(n, s + 1);
    std::vector<linalg::SparseVector<Rational>> rows;
    for (const auto& w : basis) {
      const LieElement c = LieElement::basis(n, w);
      linalg::SparseVector<Rational> row;
      for (std::size_t i = 1; i <= n; ++i) {
        const LieElement b = bracket(c, LieElement::generator(n, static_cast<int>(i)));
        for (const auto& [k, x] : b.coeffs()) row.emplace_back((i - 1) * target + k, x);
      }
      rows.push_back(std::move(row));
    }
    const auto m = linalg::RatMatrix::from_rows(n * target, std::move(rows));
    if (linalg::rank(m) != basis.size()) return false;
  }
  return true;
}

}  // namespace torelli
