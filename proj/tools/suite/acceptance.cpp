#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "torelli/budget.hpp"
#include "torelli/derivations.hpp"
#include "torelli/error.hpp"
#include "torelli/fox.hpp"
#include "torelli/free_lie.hpp"
#include "torelli/linalg.hpp"
#include "torelli/resonance.hpp"
#include "torelli/slnrep.hpp"

namespace torelli::suite {

namespace {

using io::json;
using Rng = std::mt19937_64;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::size_t below(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

struct Check {
  bool ok = true;
  std::vector<std::string> failures;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
  std::string failure_text() const {
    std::string s;
    for (const auto& f : failures) s += (s.empty() ? "" : "; ") + f;
    return s;
  }
};

CriterionResult finish(int id, std::string title, const Check& c, std::string detail, json data) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.pass = c.ok;
  r.detail = c.ok ? std::move(detail) : c.failure_text();
  r.data = std::move(data);
  return r;
}

std::string str(std::size_t x) { return std::to_string(x); }

// A random element of IA_n: a product of Magnus generators and their inverses.
Endo random_ia(std::size_t n, Rng& rng, std::size_t factors) {
  const auto gens = all_magnus_generators(n);
  Endo e = Endo::identity(n);
  for (std::size_t f = 0; f < factors; ++f) {
    Endo g = magnus_gen(gens[below(rng, gens.size())], n);
    if (rng() & 1) g = g.inverse();
    e = compose(e, g);
  }
  return e;
}

Word random_word(std::size_t n, Rng& rng, std::size_t len) {
  std::vector<int> w;
  for (std::size_t k = 0; k < len; ++k) {
    const int x = static_cast<int>(below(rng, n)) + 1;
    w.push_back(rng() & 1 ? x : -x);
  }
  return Word(n, w);
}

Word random_commutator_word(std::size_t n, Rng& rng) {
  Word c;
  do {
    c = commutator(random_word(n, rng, 1 + below(rng, 3)), random_word(n, rng, 1 + below(rng, 3)));
  } while (c.empty());
  return c;
}

json sampling_json(const SamplingReport& s) {
  return {{"seed", s.seed}, {"trials", s.trials}, {"hits", s.hits}};
}

CriterionResult certificate_criterion(int id, std::size_t n, double limit, std::size_t expected_dimV,
                                      std::size_t expected_L2, std::size_t trials, std::size_t soundness,
                                      const Options& opt) {
  const auto t0 = Clock::now();
  Check c;
  const auto cert = certify_vanishing_oan(n, opt.seed, trials, Budget(limit), opt.cache_dir);
  c.expect(cert.failure_stage.empty(), "failed at " + cert.failure_stage + ": " + cert.failure_detail);
  c.expect(cert.dimV == expected_dimV, "dim V = " + str(cert.dimV));
  c.expect(cert.dim_wedge2V == expected_L2, "dim Λ²V = " + str(cert.dim_wedge2V));
  c.expect(cert.dimK == cert.weyl_dim_mu && cert.dimK > 0,
           "dim K = " + str(cert.dimK) + " vs Weyl " + str(cert.weyl_dim_mu));
  c.expect(cert.ad_star_kills_v0 && cert.raising_kill_v0 && cert.weight_v0_is_lambda, "v0 conditions");
  c.expect(cert.maximal_space_dim == 1, "maximal vectors of V span " + str(cert.maximal_space_dim));
  c.expect(cert.ker_lambda_v0_dim == 1, "dim ker λ_v0 = " + str(cert.ker_lambda_v0_dim));
  c.expect(cert.verdict == "vanishing", "verdict " + cert.verdict);
  c.expect(cert.sampling && cert.sampling->hits == 0, "random points landed in R");
  json data = io::to_json(cert);
  if (soundness > 0 && c.ok) {
    // verdict "vanishing" must survive a larger independent draw
    const auto d = oan_cup_data(n, Budget(limit), opt.cache_dir);
    const auto s = sample_resonance(d.cup, opt.seed + 1, soundness, Budget(limit));
    c.expect(s.hits == 0, str(s.hits) + " of " + str(soundness) + " soundness points resonant");
    data["soundness"] = sampling_json(s);
  }
  const double secs = since(t0);
  c.expect(secs <= limit, "took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d << "n=" << n << " dimV=" << cert.dimV << " dimK=" << cert.dimK << " dimH2=" << cert.dimH2
    << " ker=" << cert.ker_lambda_v0_dim << " verdict=" << cert.verdict << " hits=0/"
    << (cert.sampling ? cert.sampling->trials : 0) << (soundness ? "+" + str(soundness) : "");
  return finish(id, "vanishing-resonance certificate, n=" + str(n), c, d.str(), data);
}

CriterionResult c1(const Options& o) { return certificate_criterion(1, 4, 60, 20, 190, 100, 1000, o); }
CriterionResult c2(const Options& o) { return certificate_criterion(2, 5, 900, 45, 990, 100, 1000, o); }

CriterionResult c3(const Options&) {
  Check c;
  json data = json::array();
  for (std::size_t n : {3, 4}) {
    const std::size_t r = pettet_rank(n);
    const auto snf = smith_normal_form(ad_matrix(n, 1));
    const bool unit = std::all_of(snf.divisors.begin(), snf.divisors.end(), [](const Integer& d) { return d == 1; });
    c.expect(r == n * n * (n - 1) / 2, "n=" + str(n) + " rank " + str(r));
    c.expect(unit && snf.divisors.size() == n, "n=" + str(n) + " ad Smith divisors not all 1");
    data.push_back({{"n", n}, {"rank", r}, {"ad_divisors_all_one", unit}, {"ad_rank", snf.divisors.size()}});
  }
  return finish(3, "degree-1 Johnson image rank and split ad", c, "ranks 9, 24; ad divisors all 1", data);
}

std::vector<PsiCheck> psi_table(std::initializer_list<std::size_t> ns) {
  std::vector<PsiCheck> t;
  for (std::size_t n : ns)
    for (std::size_t s = 1; s <= 3; ++s) t.push_back(psi_check(n, s));
  return t;
}

CriterionResult c4(const Options&) {
  Check c;
  const auto table = psi_table({3, 4});
  // pin the global sign at s = 1
  const int sigma = table.front().sign * -1;
  json data = json::array();
  for (const auto& p : table) {
    const int expected = sigma * (p.s % 2 ? -1 : 1);
    c.expect(p.lower_evaluations_vanish, "n=" + str(p.n) + " s=" + str(p.s) + " ev_i ψ ≠ 0 for some i < n");
    c.expect(p.sign == expected, "n=" + str(p.n) + " s=" + str(p.s) + " sign " + std::to_string(p.sign));
    data.push_back({{"n", p.n}, {"s", p.s}, {"basis", p.basis_size}, {"sign", p.sign}});
  }
  c.expect(sigma == 1 || sigma == -1, "no sign at s=1");
  return finish(4, "ψ evaluation table", c,
                "ev_n ψ(w) = " + std::string(sigma > 0 ? "" : "-") + "(-1)^s [x̄_n, w] for n∈{3,4}, s≤3", data);
}

CriterionResult c5(const Options&) {
  Check c;
  json data = json::array();
  for (const auto& p : psi_table({3, 4})) {
    const std::string at = "n=" + str(p.n) + " s=" + str(p.s);
    const std::size_t w = witt_dimension(p.n - 1, p.s);
    c.expect(p.rank_joint == p.rank_psi + p.rank_ad, at + ": im ψ meets im ad");
    c.expect(p.rank_ev_n == w, at + ": rank ev_n ψ = " + str(p.rank_ev_n) + " vs " + str(w));
    c.expect(p.rank_psi == w, at + ": rank ψ = " + str(p.rank_psi));
    data.push_back({{"n", p.n}, {"s", p.s}, {"rank_psi", p.rank_psi}, {"rank_ad", p.rank_ad},
                    {"rank_joint", p.rank_joint}, {"rank_ev_n", p.rank_ev_n}, {"witt", w}});
  }
  return finish(5, "im ψ ∩ im ad = 0 and rank ev_n ψ", c, "n=3,4, s≤3", data);
}

CriterionResult c6(const Options&) {
  Check c;
  std::size_t triples = 0;
  for (std::size_t n = 3; n <= 6; ++n) {
    auto gen = [&](std::size_t i) { return Word::generator(n, static_cast<int>(i)); };
    auto e = [&](std::size_t i, std::size_t j) { return bfn_embed(commutator(gen(i), gen(j))); };
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        for (std::size_t k = j + 1; k <= n; ++k) {
          const BFnElement r = augmentation_generator(n, i) * e(j, k) - augmentation_generator(n, j) * e(i, k) +
                               augmentation_generator(n, k) * e(i, j);
          c.expect(r.is_zero(), "n=" + str(n) + " (" + str(i) + "," + str(j) + "," + str(k) + ")");
          ++triples;
        }
  }
  return finish(6, "three-term relations in B(F_n)", c, str(triples) + " triples, n=3..6",
                {{"triples", triples}});
}

CriterionResult c7(const Options& opt) {
  Check c;
  Rng rng(opt.seed ^ 0x93);
  constexpr std::size_t n = 5;
  json data = json::array();
  for (int t = 0; t < 20; ++t) {
    std::vector<int> idx{1, 2, 3, 4, 5};
    std::shuffle(idx.begin(), idx.end(), rng);
    const int i = idx[0], j = idx[1], k = idx[2], l = idx[3], m = idx[4];
    auto g = [&](int a) { return Word::generator(n, a); };
    const Word v = commutator(g(l), commutator(g(i), g(j)));
    const Endo alpha = left_multiply_generator(n, m, v);
    const Word mk = commutator(g(m), g(k));
    const BFnElement lhs1 = bfn_embed(mk) - bfn_act(alpha, mk);
    const BFnElement rhs1 = -bfn_embed(commutator(v, g(k)));
    const BFnElement lhs2 = bfn_embed(commutator(g(k), v));
    const BFnElement rhs2 = augmentation_generator(n, k) * augmentation_generator(n, l) *
                            bfn_embed(commutator(g(i), g(j)));
    const std::string at = "(i,j,k,l,m)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) + ")";
    c.expect(lhs1 == rhs1, at + " first identity");
    c.expect(lhs2 == rhs2, at + " second identity");
    c.expect(!lhs2.is_zero(), at + " degenerate");
    data.push_back({i, j, k, l, m});
  }
  return finish(7, "Torelli action identities in B(F_5)", c, "20 seeded tuples", {{"tuples", data}});
}

Character random_nontrivial_character(std::size_t n, Rng& rng) {
  static const unsigned conductors[] = {1, 2, 3, 4, 5, 6, 8, 12};
  while (true) {
    const unsigned m = conductors[below(rng, std::size(conductors))];
    std::vector<Character::Coord> coords;
    for (std::size_t i = 0; i < n; ++i) {
      const long num = static_cast<long>(below(rng, 7)) - 3;
      const long den = static_cast<long>(below(rng, 3)) + 1;
      // scale 1 is frequent so that pure roots of unity are well represented
      const Rational scale = (num == 0 || rng() % 3 == 0) ? Rational(1) : ratio(num, den);
      coords.push_back({scale, static_cast<long>(below(rng, m))});
    }
    Character rho(m, coords);
    if (!rho.is_trivial()) return rho;
  }
}

CriterionResult c8(const Options& opt) {
  Check c;
  Rng rng(opt.seed ^ 0x61);
  json data = json::array();
  for (std::size_t n = 2; n <= 4; ++n) {
    const Presentation free{n, {}};
    c.expect(twisted_betti1(free, Character::trivial(n)) == n, "F_" + str(n) + " trivial character");
    std::size_t ok = 0;
    for (int t = 0; t < 100; ++t) {
      const Character rho = random_nontrivial_character(n, rng);
      if (twisted_betti1(free, rho) == n - 1) ++ok;
    }
    c.expect(ok == 100, "F_" + str(n) + ": " + str(100 - ok) + " characters off");
    data.push_back({{"n", n}, {"nontrivial_ok", ok}});
  }
  return finish(8, "twisted Betti numbers of free groups", c, "100 characters each for n=2,3,4", data);
}

CriterionResult c9(const Options&) {
  Check c;
  std::size_t in = 0, out = 0;
  for (unsigned m = 2; m <= 4; ++m) {
    const Presentation p{2, {power(Word::generator(2, 2), m)}};
    const std::vector<Rational> xs{Rational(2), Rational(-1), ratio(1, 3), Rational(1)};
    for (long k = 1; k < static_cast<long>(m); ++k)
      for (const auto& x : xs) {
        for (long px = 0; px < static_cast<long>(m); ++px) {
          const Character rho(m, {{x, px}, {Rational(1), k}});
          c.expect(cv_membership(p, rho, 1), "m=" + std::to_string(m) + " ρ(y)=ζ^" + std::to_string(k) + " missing");
          ++in;
        }
      }
    for (const auto& x : xs) {
      for (long px = 0; px < static_cast<long>(m); ++px) {
        const Character rho(m, {{x, px}, {Rational(1), 0}});
        if (rho.is_trivial()) continue;
        c.expect(!cv_membership(p, rho, 1), "m=" + std::to_string(m) + " ρ(y)=1 wrongly in V");
        ++out;
      }
    }
  }
  return finish(9, "characteristic variety of <x,y | y^m>", c,
                str(in) + " points inside, " + str(out) + " outside, m=2,3,4", {{"inside", in}, {"outside", out}});
}

CriterionResult c10(const Options&) {
  Check c;
  const Presentation trefoil{2, {Word(2, {1, 2, 1, -2, -1, -2})}};
  const auto ap = alexander_polynomial(trefoil);
  const LaurentPoly expected(1, {{{2}, Integer(1)}, {{1}, Integer(-1)}, {{0}, Integer(1)}});
  c.expect(normalize_unit(ap.delta) == expected, "Δ = " + ap.delta.to_string());
  const auto ab = abelianize(trefoil);
  const int e = ab.images.at(0).at(0);
  std::size_t tested = 0, roots = 0;
  auto test = [&](unsigned m, const Rational& scale, long k) {
    const Character rho(m, {{scale, k}, {scale, k}});
    if (rho.is_trivial()) return;
    const Character t(m, {{e > 0 ? scale : Rational(1 / scale), e * k}});
    const bool root = evaluate(ap.delta, t).is_zero();
    const bool member = cv_membership(trefoil, rho, 1);
    c.expect(root == member, "ζ_" + std::to_string(m) + "^" + std::to_string(k) + " scale " + to_string(scale));
    ++tested;
    if (root) ++roots;
  };
  for (unsigned m = 1; m <= 12; ++m)
    for (long k = 0; k < static_cast<long>(m); ++k) test(m, Rational(1), k);
  for (const Rational& r : {Rational(2), Rational(-1), ratio(1, 2), Rational(-3), ratio(5, 7)}) test(1, r, 0);
  c.expect(roots > 0, "no root of Δ among tested characters");
  return finish(10, "trefoil Alexander polynomial vs characteristic variety", c,
                "Δ = " + normalize_unit(ap.delta).to_string() + "; " + str(tested) + " characters, " + str(roots) +
                    " roots",
                {{"delta", normalize_unit(ap.delta).to_string()}, {"tested", tested}, {"roots", roots}});
}

CriterionResult c11(const Options&) {
  Check c;
  json table = json::array();
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t s = 1; s <= 8; ++s) {
      const std::size_t w = witt_dimension(n, s);
      const std::size_t l = lyndon_basis(n, s).size();
      c.expect(w == l, "n=" + str(n) + " s=" + str(s));
      table.push_back({n, s, w});
    }
  for (std::size_t n : {2, 3}) c.expect(center_check(n, 4), "center_check n=" + str(n));
  return finish(11, "Witt formula vs Lyndon basis; trivial center", c, "n≤4, s≤8; center n=2,3, s≤4",
                {{"witt", table}});
}

CriterionResult c12(const Options& opt) {
  Check c;
  Rng rng(opt.seed ^ 0x12);
  constexpr std::size_t n = 3;
  // an element of F^s for s in {1, 2}, with its level verified
  auto element = [&](std::size_t s) {
    if (s == 1) return random_ia(n, rng, 1 + below(rng, 2));
    if (rng() & 1) return inner_auto(random_commutator_word(n, rng));
    return commutator(random_ia(n, rng, 1), random_ia(n, rng, 1));
  };
  std::size_t kal = 0, exact = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t s = 1 + below(rng, 2), u = 1 + below(rng, 2);
    const Endo a = element(s), b = element(u);
    c.expect(johnson_filtration_degree(a, s) >= s && johnson_filtration_degree(b, u) >= u, "sample outside F^s");
    const std::size_t d = johnson_filtration_degree(commutator(a, b), s + u);
    c.expect(d >= s + u, "Kaloujnine case " + std::to_string(t) + ": level " + str(d));
    ++kal;
    if (d == s + u) ++exact;
  }
  std::size_t lin = 0;
  for (int t = 0; t < 50; ++t) {
    const Endo a = random_ia(n, rng, 1 + below(rng, 3));
    const Word w = random_commutator_word(n, rng);
    const std::size_t k = 1 + below(rng, n);
    const Word kw = commutator(Word::generator(n, static_cast<int>(k)), w);
    const LaurentPoly xk = augmentation_generator(n, k);
    c.expect(bfn_embed(kw) == xk * bfn_embed(w), "word model of (x̄_k - 1)·v");
    c.expect(bfn_act(a, kw) == xk * bfn_act(a, w), "R-linearity case " + std::to_string(t));
    ++lin;
  }
  return finish(12, "Kaloujnine and R-linearity sampling", c,
                str(kal) + " commutator cases (" + str(exact) + " sharp), " + str(lin) + " linearity cases",
                {{"kaloujnine", kal}, {"sharp", exact}, {"linearity", lin}});
}

CriterionResult c13(const Options& opt) {
  Check c;
  const auto t0 = Clock::now();
  json data;
  const auto f2 = binf_from_cup(CupData::zero(2));
  json f2dims = json::array();
  for (std::size_t q = 2; q <= 10; ++q) {
    const std::size_t d = binf_graded_dim(f2, q);
    c.expect(d == monomial_count(2, q - 2), "F_2 q=" + str(q) + " dim " + str(d));
    f2dims.push_back(d);
  }
  data["F2"] = f2dims;
  const auto h1 = binf_from_cup(CupData::zero(1));
  for (std::size_t q = 2; q <= 6; ++q) c.expect(binf_graded_dim(h1, q) == 0, "h=1 q=" + str(q));
  const auto t1 = binf_total_dim(h1, 4);
  c.expect(t1.finite && t1.total == 0, "h=1 total");
  c.expect(binf_graded_dim(binf_from_cup(CupData::zero(3)), 3) == 8, "F_3 degree 3");
  const Budget budget(300);
  std::string oa = "unresolved";
  try {
    const auto d = oan_cup_data(4, budget, opt.cache_dir);
    const auto p = binf_from_cup(d.cup);
    const auto tot = binf_total_dim(p, 3, budget);
    data["OA4"] = {{"dims", tot.dims}, {"cap", tot.cap}, {"finite", tot.finite}};
    if (tot.finite) {
      oa = "finite, total " + str(tot.total);
      data["OA4"]["total"] = tot.total;
    } else {
      data["OA4"]["status"] = "unresolved";
    }
    c.expect(tot.dims.size() == 2, "OA_4 degrees 2 and 3 not both computed");
    oa = "OA_4 dims " + str(tot.dims.at(0)) + ", " + str(tot.dims.at(1)) + " (" + oa + " at cap 3)";
  } catch (const ResourceLimit& e) {
    c.expect(false, "OA_4 hit the budget at " + e.stage());
  }
  c.expect(since(t0) <= 300, "over 300 s");
  return finish(13, "infinitesimal Alexander invariant dims", c, "F_2 q-1 up to q=10; h=1 zero; " + oa, data);
}

}  // namespace

std::string line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " [" << (r.id < 10 ? " " : "") << r.id << "] " << r.title << ": " << r.detail;
  return os.str();
}

Report run_acceptance(const Options& opt) {
  using Fn = CriterionResult (*)(const Options&);
  static const Fn fns[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13};
  const auto t0 = Clock::now();
  Report rep;
  auto selected = [&](int id) {
    // the full-battery criterion needs every other one
    auto has = [&](int x) { return std::find(opt.only.begin(), opt.only.end(), x) != opt.only.end(); };
    return opt.only.empty() || has(id) || has(14);
  };
  for (int id = 1; id <= 13; ++id) {
    if (!selected(id)) continue;
    const auto t = Clock::now();
    CriterionResult r;
    try {
      r = fns[id - 1](opt);
    } catch (const Error& e) {
      r.id = id;
      r.title = "criterion " + std::to_string(id);
      r.detail = "error at " + e.stage() + ": " + e.what();
    } catch (const std::exception& e) {
      r.id = id;
      r.title = "criterion " + std::to_string(id);
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = since(t);
    if (opt.on_result) opt.on_result(r);
    rep.results.push_back(std::move(r));
  }
  if (selected(14)) {
    CriterionResult r;
    r.id = 14;
    r.title = "full battery";
    const double total = since(t0);
    const bool all = std::all_of(rep.results.begin(), rep.results.end(), [](const auto& x) { return x.pass; });
    const bool full = rep.results.size() == 13;
    r.pass = all && full && total <= 1800;
    r.detail = !full   ? "needs all 13 criteria in the same run"
               : !all  ? "some criterion failed"
               : total > 1800 ? "over 30 min"
                              : "13 criteria passed within 30 min";
    r.data = {{"criteria", rep.results.size()}, {"within_budget", total <= 1800}};
    r.seconds = total;
    if (opt.on_result) opt.on_result(r);
    rep.results.push_back(std::move(r));
  }
  rep.seconds = since(t0);
  rep.all_pass = std::all_of(rep.results.begin(), rep.results.end(), [](const auto& x) { return x.pass; });
  return rep;
}

io::json to_json(const Report& r) {
  json list = json::array();
  for (const auto& x : r.results)
    list.push_back({{"id", x.id}, {"title", x.title}, {"pass", x.pass}, {"detail", x.detail}, {"data", x.data}});
  return {{"version", io::kVersion}, {"all_pass", r.all_pass}, {"criteria", list}};
}

}  // namespace torelli::suite
