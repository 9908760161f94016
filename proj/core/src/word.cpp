#include "torelli/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "torelli/error.hpp"

namespace torelli {

Word reduce(std::size_t rank, const std::vector<int>& letters) { return Word(rank, letters); }

Word::Word(std::size_t rank, std::vector<int> letters) : rank_(rank) {
  std::vector<int> stack;
  stack.reserve(letters.size());
  for (int a : letters) {
    if (a == 0 || static_cast<std::size_t>(std::abs(a)) > rank)
      throw PreconditionError("word", "letter " + std::to_string(a) + " outside 1.." + std::to_string(rank));
    if (!stack.empty() && stack.back() == -a)
      stack.pop_back();
    else
      stack.push_back(a);
  }
  letters_ = std::move(stack);
}

Word Word::inverse() const {
  Word r(rank_);
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(-*it);
  return r;
}

std::vector<long> Word::exponent_sums() const {
  std::vector<long> e(rank_, 0);
  for (int a : letters_) e[std::abs(a) - 1] += a > 0 ? 1 : -1;
  return e;
}

bool Word::in_commutator_subgroup() const {
  const auto e = exponent_sums();
  return std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
}

Word operator*(const Word& a, const Word& b) {
  if (a.rank_ != b.rank_)
    throw PreconditionError("word", "rank mismatch " + std::to_string(a.rank_) + " vs " + std::to_string(b.rank_));
  Word r(a.rank_);
  std::size_t keep = a.letters_.size();
  std::size_t skip = 0;
  while (keep > 0 && skip < b.letters_.size() && a.letters_[keep - 1] == -b.letters_[skip]) --keep, ++skip;
  r.letters_.reserve(keep + b.letters_.size() - skip);
  r.letters_.insert(r.letters_.end(), a.letters_.begin(), a.letters_.begin() + keep);
  r.letters_.insert(r.letters_.end(), b.letters_.begin() + skip, b.letters_.end());
  return r;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << (letters_[i] > 0 ? 'x' : 'X') << std::abs(letters_[i]);
  }
  return os.str();
}

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

Word conjugate(const Word& x, const Word& y) { return x * y * x.inverse(); }

Word power(const Word& w, long e) {
  Word base = e < 0 ? w.inverse() : w;
  Word r(w.rank());
  for (long k = 0; k < std::labs(e); ++k) r = r * base;
  return r;
}

Endo::Endo(std::size_t rank, std::vector<Word> images, std::optional<std::vector<Word>> inverse_images)
    : rank_(rank), images_(std::move(images)), inverse_(std::move(inverse_images)) {
  if (images_.size() != rank_) throw PreconditionError("endo", "expected " + std::to_string(rank_) + " images");
  for (const auto& w : images_)
    if (w.rank() != rank_) throw PreconditionError("endo", "image rank mismatch");
  if (inverse_) {
    if (inverse_->size() != rank_) throw PreconditionError("endo", "inverse image count mismatch");
    for (const auto& w : *inverse_)
      if (w.rank() != rank_) throw PreconditionError("endo", "inverse image rank mismatch");
  }
}

Endo Endo::identity(std::size_t rank) {
  std::vector<Word> gens;
  for (std::size_t i = 1; i <= rank; ++i) gens.push_back(Word::generator(rank, static_cast<int>(i)));
  return Endo(rank, gens, gens);
}

Word Endo::apply(const Word& w) const {
  if (w.rank() != rank_)
    throw PreconditionError("endo", "rank mismatch " + std::to_string(rank_) + " vs " + std::to_string(w.rank()));
  std::vector<int> out;
  for (int a : w.letters()) {
    const Word& img = images_[std::abs(a) - 1];
    if (a > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push_back(-*it);
    }
  }
  return Word(rank_, std::move(out));
}

Endo Endo::inverse() const {
  if (!inverse_) throw PreconditionError("endo", "no stored inverse");
  return Endo(rank_, *inverse_, images_);
}

bool Endo::verify_inverse() const {
  if (!inverse_) return false;
  const Endo inv(rank_, *inverse_);
  const Endo fwd(rank_, images_);
  for (std::size_t i = 1; i <= rank_; ++i) {
    const Word x = Word::generator(rank_, static_cast<int>(i));
    if (fwd.apply(inv.apply(x)) != x || inv.apply(fwd.apply(x)) != x) return false;
  }
  return true;
}

bool Endo::acts_trivially_on_homology() const {
  for (std::size_t i = 0; i < rank_; ++i) {
    const auto e = images_[i].exponent_sums();
    for (std::size_t j = 0; j < rank_; ++j)
      if (e[j] != (i == j ? 1 : 0)) return false;
  }
  return true;
}

Word apply_endo(const Endo& a, const Word& w) { return a.apply(w); }

Endo compose(const Endo& a, const Endo& b) {
  if (a.rank() != b.rank()) throw PreconditionError("endo", "composition rank mismatch");
  std::vector<Word> imgs;
  imgs.reserve(a.rank());
  for (const auto& w : b.images()) imgs.push_back(a.apply(w));
  std::optional<std::vector<Word>> inv;
  if (a.has_inverse() && b.has_inverse()) {
    const Endo ainv = a.inverse();
    const Endo binv = b.inverse();
    inv.emplace();
    for (const auto& w : ainv.images()) inv->push_back(binv.apply(w));
  }
  return Endo(a.rank(), std::move(imgs), std::move(inv));
}

Endo commutator(const Endo& a, const Endo& b) {
  if (!a.has_inverse() || !b.has_inverse())
    throw PreconditionError("endo", "commutator needs stored inverses");
  return compose(compose(a, b), compose(a.inverse(), b.inverse()));
}

std::string MagnusGenerator::name() const {
  if (kind == Kind::Conj) return "a" + std::to_string(i) + "," + std::to_string(j);
  return "a" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
}

Endo magnus_gen(const MagnusGenerator& g, std::size_t n) {
  const int nn = static_cast<int>(n);
  auto in_range = [nn](int x) { return x >= 1 && x <= nn; };
  if (!in_range(g.i) || !in_range(g.j) || (g.kind == MagnusGenerator::Kind::Chain && !in_range(g.k)))
    throw PreconditionError("magnus-gen", "index outside 1.." + std::to_string(n));
  if (g.i == g.j || (g.kind == MagnusGenerator::Kind::Chain && (g.i == g.k || g.j == g.k)))
    throw PreconditionError("magnus-gen", "indices of " + g.name() + " must be distinct");

  std::vector<Word> fwd, inv;
  for (int x = 1; x <= nn; ++x) {
    fwd.push_back(Word::generator(n, x));
    inv.push_back(Word::generator(n, x));
  }
  const Word xi = Word::generator(n, g.i);
  const Word xj = Word::generator(n, g.j);
  if (g.kind == MagnusGenerator::Kind::Conj) {
    fwd[g.i - 1] = conjugate(xj, xi);
    inv[g.i - 1] = conjugate(xj.inverse(), xi);
  } else {
    const Word c = commutator(xj, Word::generator(n, g.k));
    fwd[g.i - 1] = xi * c;
    inv[g.i - 1] = xi * c.inverse();
  }
  Endo e(n, std::move(fwd), std::move(inv));
  if (!e.verify_inverse()) throw VerificationFailure("magnus-gen", "stored inverse of " + g.name() + " is wrong");
  return e;
}

std::vector<MagnusGenerator> all_magnus_generators(std::size_t n) {
  std::vector<MagnusGenerator> gens;
  const int nn = static_cast<int>(n);
  for (int i = 1; i <= nn; ++i)
    for (int j = 1; j <= nn; ++j)
      if (i != j) gens.push_back(MagnusGenerator::conj(i, j));
  for (int i = 1; i <= nn; ++i)
    for (int j = 1; j <= nn; ++j)
      for (int k = 1; k <= nn; ++k)
        if (j < k && i != j && i != k) gens.push_back(MagnusGenerator::chain(i, j, k));
  return gens;
}

Endo inner_auto(const Word& x) {
  const std::size_t n = x.rank();
  std::vector<Word> fwd, inv;
  for (std::size_t i = 1; i <= n; ++i) {
    const Word g = Word::generator(n, static_cast<int>(i));
    fwd.push_back(conjugate(x, g));
    inv.push_back(conjugate(x.inverse(), g));
  }
  return Endo(n, std::move(fwd), std::move(inv));
}

Endo left_multiply_generator(std::size_t rank, int m, const Word& v) {
  if (m < 1 || static_cast<std::size_t>(m) > rank) throw PreconditionError("endo", "generator index out of range");
  if (v.rank() != rank) throw PreconditionError("endo", "rank mismatch");
  for (int a : v.letters())
    if (std::abs(a) == m) throw PreconditionError("endo", "multiplier must not involve x" + std::to_string(m));
  Endo id = Endo::identity(rank);
  std::vector<Word> fwd = id.images();
  std::vector<Word> inv = id.images();
  const Word xm = Word::generator(rank, m);
  fwd[m - 1] = v * xm;
  inv[m - 1] = v.inverse() * xm;
  Endo e(rank, std::move(fwd), std::move(inv));
  if (!e.verify_inverse()) throw VerificationFailure("endo", "left multiplication inverse failed");
  return e;
}

}  // namespace torelli
