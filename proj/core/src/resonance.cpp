#include "torelli/resonance.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "torelli/error.hpp"
#include "torelli/free_lie.hpp"

namespace torelli {

namespace {

std::size_t choose2(std::size_t h) { return h * (h - (h ? 1 : 0)) / 2; }

// Forward elimination only: enough for a rank and cheaper than keeping the
// basis fully reduced.
class ForwardRank {
 public:
  bool insert(QVector v) {
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) {
        const Rational inv = 1 / v.front().second;
        linalg::scale(v, inv);
        rows_.emplace(v.front().first, std::move(v));
        return true;
      }
      v = linalg::axpy(v, Rational(-v.front().second), it->second);
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<std::size_t, QVector> rows_;
};

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

// Rank over F_p of integer vectors obtained by clearing denominators.
std::size_t modular_rank(const std::vector<QVector>& vectors, std::size_t dim) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& v : vectors) {
    Integer l = 1;
    for (const auto& [i, c] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<std::uint64_t> r(dim, 0);
    for (const auto& [i, c] : v) {
      Integer x = c.get_num() * (l / c.get_den());
      r[i] = mpz_fdiv_ui(x.get_mpz_t(), kPrime);
    }
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const std::uint64_t inv = powmod(rows[rank][col], kPrime - 2);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const std::uint64_t f = mulmod(rows[i][col], inv);
      for (std::size_t j = col; j < dim; ++j)
        if (rows[rank][j]) rows[i][j] = (rows[i][j] + kPrime - mulmod(f, rows[rank][j])) % kPrime;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

CupData CupData::zero(std::size_t h1) {
  CupData c;
  c.h1 = h1;
  c.columns.assign(choose2(h1), {});
  return c;
}

void CupData::validate() const {
  if (columns.size() != choose2(h1))
    throw PreconditionError("cup", "expected " + std::to_string(choose2(h1)) + " columns, got " +
                                       std::to_string(columns.size()));
  for (const auto& c : columns)
    if (!c.empty() && c.back().first >= h2) throw PreconditionError("cup", "column entry beyond dim H2");
}

linalg::RatMatrix CupData::matrix() const { return linalg::RatMatrix::from_rows(h2, columns).transpose(); }

std::vector<QVector> lambda_columns(const CupData& c, const QVector& z) {
  if (!z.empty() && z.back().first >= c.h1) throw PreconditionError("resonance", "vector longer than dim H1");
  std::vector<QVector> cols(c.h1);
  for (std::size_t b = 0; b < c.h1; ++b) {
    QVector col;
    for (const auto& [a, x] : z) {
      if (a == b) continue;
      const QVector& src = c.columns[RepSpace::pair_index(c.h1, std::min(a, b), std::max(a, b))];
      const Rational f = a < b ? x : Rational(-x);
      for (const auto& [i, y] : src) col.emplace_back(i, f * y);
    }
    linalg::canonicalize(col);
    cols[b] = std::move(col);
  }
  return cols;
}

std::size_t exact_rank(const std::vector<QVector>& vectors, std::size_t) {
  ForwardRank f;
  for (const auto& v : vectors) f.insert(v);
  return f.rank();
}

std::size_t lambda_kernel_dim(const CupData& c, const QVector& z) {
  const auto cols = lambda_columns(c, z);
  if (c.h1 == 0) return 0;
  std::size_t r = modular_rank(cols, c.h2);
  // z lies in the kernel, so h1 - 1 is the largest possible rank
  if (z.empty() || r + 1 < c.h1) r = exact_rank(cols, c.h2);
  return c.h1 - r;
}

bool resonance_membership(const CupData& c, const QVector& z) {
  c.validate();
  QVector zz = z;
  linalg::canonicalize(zz);
  if (zz.empty()) return c.h1 >= 2;
  return lambda_kernel_dim(c, zz) >= 2;
}

QVector sample_vector(std::size_t dim, std::mt19937_64& rng, int height) {
  const std::uint64_t span = static_cast<std::uint64_t>(2 * height + 1);
  while (true) {
    QVector v;
    for (std::size_t i = 0; i < dim; ++i) {
      const long x = static_cast<long>(rng() % span) - height;
      if (x) v.emplace_back(i, Rational(x));
    }
    if (!v.empty() || dim == 0) return v;
  }
}

SamplingReport sample_resonance(const CupData& c, std::uint64_t seed, std::size_t trials, const Budget& budget) {
  std::mt19937_64 rng(seed);
  SamplingReport rep{seed, 0, 0};
  for (std::size_t t = 0; t < trials; ++t) {
    budget.check("sampling");
    if (resonance_membership(c, sample_vector(c.h1, rng))) ++rep.hits;
    ++rep.trials;
  }
  return rep;
}

namespace {

std::string vector_string(const QVector& v) {
  std::ostringstream os;
  for (const auto& [i, c] : v) os << i << ':' << c.get_str() << ' ';
  return os.str();
}

QVector parse_vector(std::istringstream& is) {
  QVector v;
  std::string tok;
  while (is >> tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw PreconditionError("cache", "malformed entry " + tok);
    v.emplace_back(std::stoul(tok.substr(0, colon)), parse_rational(tok.substr(colon + 1)));
  }
  return v;
}

std::filesystem::path cache_path(const std::string& dir, const std::string& key) {
  std::ostringstream name;
  name << "oanK-" << std::hex << fnv1a(key) << ".txt";
  return std::filesystem::path(dir) / name.str();
}

// Stability under the simple root operators x_{l,l+1}, x_{l+1,l}, which
// generate sl_n, is stability under all of sl_n.
bool stable_under_generators(const RepSpace& x, const linalg::EchelonBasis<Rational>& k) {
  const int n = static_cast<int>(x.n());
  for (const auto& [p, row] : k.rows())
    for (int l = 1; l < n; ++l) {
      if (!k.contains(x.apply(l, l + 1, row))) return false;
      if (!k.contains(x.apply(l + 1, l, row))) return false;
    }
  return true;
}

std::optional<linalg::EchelonBasis<Rational>> load_K(const std::filesystem::path& path, const std::string& key,
                                                      const OanData& d) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string header;
  std::getline(in, header);
  if (header != key) return std::nullopt;
  linalg::EchelonBasis<Rational> k(d.L2.dim());
  std::string line;
  try {
    while (std::getline(in, line)) {
      std::istringstream is(line);
      k.insert(parse_vector(is));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (k.rank() == 0 || !k.contains(d.u0) || !stable_under_generators(d.L2, k)) return std::nullopt;
  return k;
}

void store_K(const std::filesystem::path& path, const std::string& key, const linalg::EchelonBasis<Rational>& k) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << key << '\n';
    for (const auto& [p, row] : k.rows()) out << vector_string(row) << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

OanData oan_cup_data(std::size_t n, const Budget& budget, const std::string& cache_dir) {
  if (n < 4) throw PreconditionError("oan", "OA_n data needs n >= 4");
  if (n > kMaxOanRank)
    throw ResourceLimit("oan", "n = " + std::to_string(n) + " exceeds the supported cap " + std::to_string(kMaxOanRank));
  OanData d;
  d.n = n;
  d.V = build_V(n);
  budget.check("build-V");

  d.lambda = canonical_weight([&] {
    Weight w(n, 0);
    w[0] = 1;
    w[n - 2] = -1;
    w[n - 1] = -1;
    return w;
  }());
  d.mu = sub_weights(d.lambda, t_weight(n, n));

  // v0 = e_1 ⊗ e_{n-1}* ∧ e_n*
  const RepSpace ambient = ambient_H_wedge2_dual(n);
  const std::size_t v0_ambient = RepSpace::pair_index(n, n - 2, n - 1);
  const QVector v0_amb{{v0_ambient, Rational(1)}};
  d.ad_star_kills_v0 = adjoint_trace_matrix(n).apply(v0_amb).empty();
  d.raising_kill_v0 = true;
  for (int l = 1; l <= static_cast<int>(n); ++l)
    for (int m = l + 1; m <= static_cast<int>(n); ++m)
      if (!ambient.apply(l, m, v0_amb).empty()) d.raising_kill_v0 = false;
  d.weight_v0_is_lambda = ambient.weight(v0_ambient) == d.lambda;

  // coordinates of v0 in V: its entries at the pivots of V's echelon basis
  QVector back;
  for (std::size_t k = 0; k < d.V.dim(); ++k) {
    const auto& row = d.V.embedding()[k];
    const Rational* c = linalg::lookup(v0_amb, row.front().first);
    if (c) {
      d.v0.emplace_back(k, *c);
      back = linalg::axpy(back, *c, row);
    }
  }
  if (back != v0_amb) throw VerificationFailure("oan", "v0 does not lie in V");

  d.maximal_space_dim = maximal_vectors(d.V).size();
  d.v0_generates_V = generate_submodule(d.V, d.v0).rank() == d.V.dim();
  budget.check("maximal-vectors");

  d.L2 = RepSpace::wedge2(d.V);
  budget.check("wedge2");
  const auto u0s = maximal_vectors(d.L2, d.mu);
  d.u0_space_dim = u0s.size();
  if (u0s.size() != 1)
    throw VerificationFailure("u0", "maximal vectors of weight " + weight_string(d.mu) + " in Λ²V span dimension " +
                                        std::to_string(u0s.size()) + ", expected 1");
  d.u0 = u0s.front();
  budget.check("u0");

  const std::string key = "torelli-oan-K v1 n=" + std::to_string(n) + " dimL2=" + std::to_string(d.L2.dim()) +
                          " u0=" + vector_string(d.u0);
  std::optional<linalg::EchelonBasis<Rational>> cached;
  if (!cache_dir.empty()) cached = load_K(cache_path(cache_dir, key), key, d);
  if (cached) {
    d.K = std::move(*cached);
    d.K_from_cache = true;
  } else {
    d.K = generate_submodule(d.L2, d.u0);
    if (!cache_dir.empty()) store_K(cache_path(cache_dir, key), key, d.K);
  }
  budget.check("submodule");

  // H² coordinates: the non-pivot columns of K
  std::vector<long> slot(d.L2.dim(), -1);
  std::size_t h2 = 0;
  for (std::size_t c = 0; c < d.L2.dim(); ++c)
    if (!d.K.rows().count(c)) slot[c] = static_cast<long>(h2++);
  d.cup.h1 = d.V.dim();
  d.cup.h2 = h2;
  d.cup.columns.resize(d.L2.dim());
  for (std::size_t p = 0; p < d.L2.dim(); ++p) {
    QVector r = d.K.reduce({{p, Rational(1)}});
    QVector col;
    for (const auto& [c, x] : r) col.emplace_back(static_cast<std::size_t>(slot[c]), x);
    d.cup.columns[p] = std::move(col);
  }
  budget.check("cup-projection");
  return d;
}

ResonanceCertificate certify_vanishing_oan(std::size_t n, std::uint64_t seed, std::size_t trials,
                                           const Budget& budget, const std::string& cache_dir) {
  const auto start = std::chrono::steady_clock::now();
  ResonanceCertificate cert;
  cert.n = n;
  auto finish = [&] {
    cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
  };
  OanData d;
  try {
    d = oan_cup_data(n, budget, cache_dir);
  } catch (const ResourceLimit& e) {
    cert.failure_is_resource_limit = true;
    cert.failure_stage = e.stage();
    cert.failure_detail = e.what();
    return finish();
  } catch (const VerificationFailure& e) {
    cert.failure_stage = e.stage();
    cert.failure_detail = e.what();
    return finish();
  }
  cert.dimV = d.V.dim();
  cert.dimK = d.K.rank();
  cert.dim_wedge2V = d.L2.dim();
  cert.dimH2 = d.cup.h2;
  cert.weight_v0 = d.lambda;
  cert.lambda = d.lambda;
  cert.mu = d.mu;
  cert.weyl_dim_mu = weyl_dim(dynkin_labels(d.mu), n).get_ui();
  cert.maximal_space_dim = d.maximal_space_dim;
  cert.u0_space_dim = d.u0_space_dim;
  cert.ad_star_kills_v0 = d.ad_star_kills_v0;
  cert.raising_kill_v0 = d.raising_kill_v0;
  cert.weight_v0_is_lambda = d.weight_v0_is_lambda;
  cert.v0_generates_V = d.v0_generates_V;
  cert.K_from_cache = d.K_from_cache;
  if (!d.weight_v0_is_lambda) cert.weight_v0 = d.V.weight(d.v0.front().first);

  const bool structure_ok = d.ad_star_kills_v0 && d.raising_kill_v0 && d.weight_v0_is_lambda &&
                            d.maximal_space_dim == 1 && d.u0_space_dim == 1 && cert.dimK == cert.weyl_dim_mu;
  try {
    budget.check("lambda-v0");
    // exact rank here: this number is the certificate itself
    cert.ker_lambda_v0_dim = d.cup.h1 - exact_rank(lambda_columns(d.cup, d.v0), d.cup.h2);
    if (cert.ker_lambda_v0_dim >= 2)
      cert.verdict = "nonvanishing";
    else if (structure_ok && cert.ker_lambda_v0_dim == 1)
      cert.verdict = "vanishing";
    if (trials > 0) cert.sampling = sample_resonance(d.cup, seed, trials, budget);
  } catch (const ResourceLimit& e) {
    cert.failure_is_resource_limit = true;
    cert.failure_stage = e.stage();
    cert.failure_detail = e.what();
    return finish();
  }

  cert.reasoning = {
      "K is an sl_n-submodule of the second exterior power of V by construction, so the resonance variety is "
      "stable under SL_n and is a closed cone",
      "a nonzero closed SL_n-stable cone in V contains a maximal vector (Borel fixed point on its projectivization)",
      "the maximal vectors of V span a line, so that vector is v0 up to scale",
      "v0 wedge u lies in K only for u on the line of v0, so v0 is not in the resonance variety",
      "hence the resonance variety is contained in {0}",
  };
  return finish();
}

BinfPresentation binf_presentation(std::size_t h, const linalg::RatMatrix& partial) {
  if (partial.rows() != choose2(h))
    throw PreconditionError("binf", "∂ must have C(h,2) = " + std::to_string(choose2(h)) + " rows, got " +
                                        std::to_string(partial.rows()));
  BinfPresentation p;
  p.h = h;
  p.h2 = partial.cols();
  p.partial = partial;
  if (partial.cols() == 0) {
    for (std::size_t i = 0; i < choose2(h); ++i) p.annihilator.push_back({{i, Rational(1)}});
  } else {
    p.annihilator = linalg::kernel_basis_sparse(partial.transpose());
  }
  return p;
}

BinfPresentation binf_from_cup(const CupData& c) {
  c.validate();
  return binf_presentation(c.h1, c.matrix().transpose());
}

std::vector<std::tuple<std::size_t, std::size_t, int>> delta3(std::size_t h, std::size_t i, std::size_t j,
                                                               std::size_t k) {
  if (!(i < j && j < k && k < h)) throw PreconditionError("delta3", "need i < j < k < h");
  return {{i, RepSpace::pair_index(h, j, k), 1},
          {j, RepSpace::pair_index(h, i, k), -1},
          {k, RepSpace::pair_index(h, i, j), 1}};
}

std::size_t monomial_count(std::size_t h, std::size_t d) {
  if (h == 0) return d == 0 ? 1 : 0;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), h + d - 1, d);
  return c.get_ui();
}

namespace {

using Monomial = std::vector<int>;

std::vector<Monomial> monomials(std::size_t h, std::size_t d) {
  std::vector<Monomial> out;
  Monomial m(h, 0);
  // lexicographically decreasing exponent vectors
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == h) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[i] = e;
      rec(i + 1, left - e);
    }
  };
  if (h == 0) {
    if (d == 0) out.push_back(m);
    return out;
  }
  rec(0, static_cast<int>(d));
  return out;
}

}  // namespace

std::size_t binf_graded_dim(const BinfPresentation& p, std::size_t q, const Budget& budget) {
  if (q < 2) throw PreconditionError("binf", "graded pieces start in degree 2");
  const std::size_t h = p.h;
  const std::size_t dq = p.annihilator.size();
  if (dq == 0) return 0;
  const auto target = monomials(h, q - 2);
  if (q == 2) return dq * target.size();
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);
  // pairing of each pair e_a∧e_b with the annihilator basis
  std::vector<QVector> qcoord(choose2(h));
  for (std::size_t j = 0; j < dq; ++j)
    for (const auto& [pair, x] : p.annihilator[j]) qcoord[pair].emplace_back(j, x);
  const auto sources = monomials(h, q - 3);
  ForwardRank rank;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j)
      for (std::size_t k = j + 1; k < h; ++k) {
        budget.check("binf-relations");
        const auto terms = delta3(h, i, j, k);
        for (const auto& m : sources) {
          QVector rel;
          for (const auto& [x, pair, sign] : terms) {
            Monomial mx = m;
            ++mx[x];
            const std::size_t base = index.at(mx) * dq;
            for (const auto& [c, v] : qcoord[pair]) rel.emplace_back(base + c, sign > 0 ? v : Rational(-v));
          }
          linalg::canonicalize(rel);
          rank.insert(std::move(rel));
        }
      }
  return dq * target.size() - rank.rank();
}

BinfTotal binf_total_dim(const BinfPresentation& p, std::size_t cap, const Budget& budget) {
  if (cap < 2) throw PreconditionError("binf", "cap must be at least 2");
  BinfTotal t;
  t.cap = cap;
  std::size_t sum = 0;
  for (std::size_t q = 2; q <= cap; ++q) {
    const std::size_t d = binf_graded_dim(p, q, budget);
    t.dims.push_back(d);
    sum += d;
    if (d == 0) {
      t.finite = true;
      t.total = sum;
      return t;
    }
  }
  return t;
}

std::vector<std::size_t> holonomy_bracket_dims(const BinfPresentation& p, std::size_t q) {
  if (q > kMaxHolonomyDegree)
    throw ResourceLimit("holonomy", "degree " + std::to_string(q) + " exceeds cap " +
                                        std::to_string(kMaxHolonomyDegree));
  const std::size_t h = p.h;
  std::vector<std::size_t> dims;
  if (q == 0 || h == 0) return dims;
  dims.push_back(h);
  if (q == 1) return dims;
  // I_2 = im ∂ with e_a∧e_b read as [x_a, x_b]
  std::vector<LieElement> ideal;
  {
    linalg::EchelonBasis<Rational> e(witt_dimension(h, 2));
    // pair order and Lyndon order agree in degree 2
    std::vector<std::size_t> lie_slot;
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t b = a + 1; b < h; ++b)
        lie_slot.push_back(lyndon_index(h, {static_cast<int>(a + 1), static_cast<int>(b + 1)}));
    const auto cols = p.partial.transpose();
    for (std::size_t j = 0; j < cols.rows(); ++j) {
      QVector v;
      for (const auto& [pair, x] : cols.row(j)) v.emplace_back(lie_slot[pair], x);
      linalg::canonicalize(v);
      if (e.insert(v)) ideal.emplace_back(h, 2, std::move(v));
    }
  }
  dims.push_back(witt_dimension(h, 2) - ideal.size());
  for (std::size_t d = 3; d <= q; ++d) {
    linalg::EchelonBasis<Rational> e(witt_dimension(h, d));
    std::vector<LieElement> next;
    for (const auto& g : ideal)
      for (std::size_t i = 1; i <= h; ++i) {
        LieElement b = bracket(LieElement::generator(h, static_cast<int>(i)), g);
        if (e.insert(b.coeffs())) next.push_back(std::move(b));
      }
    ideal = std::move(next);
    dims.push_back(witt_dimension(h, d) - ideal.size());
  }
  return dims;
}

}  // namespace torelli
