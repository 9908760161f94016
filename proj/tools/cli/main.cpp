// torelli: command-line front end. Every report is JSON on stdout (or the
// --out file); CSV is offered for the tabular dimension commands.
//
// exit 0  success, every check verified
//      1  a mathematical check failed
//      2  input or usage error
//      3  resource cap hit

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "acceptance.hpp"
#include "json_io.hpp"
#include "torelli/budget.hpp"
#include "torelli/derivations.hpp"
#include "torelli/error.hpp"
#include "torelli/fox.hpp"
#include "torelli/free_lie.hpp"
#include "torelli/resonance.hpp"
#include "torelli/slnrep.hpp"

using namespace torelli;
using io::json;

namespace {

struct Config {
  std::size_t n = 0;
  std::size_t max_deg = 0;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
  std::string presentation;
  std::string character;
  std::size_t trials = 0;
  double time_budget = 0;
  std::string word;
  std::string endo;
  std::size_t deg = 0;
  std::string hw;
  std::string source;
  std::size_t rhs_d = 1;
  std::vector<int> criteria;
  int verbosity = 0;

  Budget budget() const { return time_budget > 0 ? Budget(time_budget) : Budget::unlimited(); }
  static std::string cache_dir() {
    const char* c = std::getenv("TORELLI_CACHE_DIR");
    return c ? c : "";
  }
};

// A CSV table or a JSON report, plus the exit status it implies.
struct Output {
  json report;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int status = 0;
};

[[noreturn]] void usage(const std::string& detail) { throw PreconditionError("usage", detail); }

void need(bool cond, const std::string& what) {
  if (!cond) usage(what);
}

json as_json_input(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t");
  if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '['))
    return io::parse_text(text_or_path);
  return io::read_file(text_or_path);
}

Word parse_word(const Config& c) {
  need(!c.word.empty(), "--word is required");
  std::string text = c.word;
  if (text.find('[') == std::string::npos) text = "[" + text + "]";
  return io::word_from_json(io::parse_text(text), c.n);
}

// conj:i,j | chain:i,j,k | inner:<word> | JSON text | path
Endo parse_endo(const Config& c) {
  need(!c.endo.empty(), "--endo is required");
  auto ints = [](const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
    return v;
  };
  const auto colon = c.endo.find(':');
  if (colon != std::string::npos && c.endo.front() != '{') {
    const std::string kind = c.endo.substr(0, colon), rest = c.endo.substr(colon + 1);
    if (kind == "inner") {
      Config w = c;
      w.word = rest;
      return inner_auto(parse_word(w));
    }
    need(c.n > 0, "--n is required with " + kind + ":");
    const auto v = ints(rest);
    try {
      if (kind == "conj" && v.size() == 2) return magnus_gen(MagnusGenerator::conj(v[0], v[1]), c.n);
      if (kind == "chain" && v.size() == 3) return magnus_gen(MagnusGenerator::chain(v[0], v[1], v[2]), c.n);
    } catch (const std::invalid_argument&) {
    }
    usage("cannot read --endo " + c.endo);
  }
  return io::endo_from_json(as_json_input(c.endo));
}

std::vector<unsigned> parse_hw(const std::string& s) {
  std::vector<unsigned> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const long x = std::stol(tok);
    need(x >= 0, "highest weight labels must be nonnegative");
    v.push_back(static_cast<unsigned>(x));
  }
  return v;
}

BinfPresentation parse_source(const Config& c) {
  const std::string s = c.source.empty() ? "free:" + std::to_string(c.n) : c.source;
  const auto colon = s.find(':');
  need(colon != std::string::npos, "--source is free:h, oan:n or cup:path");
  const std::string kind = s.substr(0, colon), arg = s.substr(colon + 1);
  if (kind == "free") return binf_from_cup(CupData::zero(std::stoul(arg)));
  if (kind == "oan") return binf_from_cup(oan_cup_data(std::stoul(arg), c.budget(), Config::cache_dir()).cup);
  if (kind == "cup") {
    // {"h1": h, "h2": m, "matrix": m rows of C(h,2) rationals}
    const json j = as_json_input(arg);
    CupData d = CupData::zero(j.at("h1").get<std::size_t>());
    d.h2 = j.at("h2").get<std::size_t>();
    const auto& rows = j.at("matrix");
    need(rows.size() == d.h2, "cup matrix needs h2 rows");
    for (std::size_t r = 0; r < d.h2; ++r) {
      need(rows[r].size() == d.columns.size(), "cup matrix rows need C(h1,2) entries");
      for (std::size_t p = 0; p < d.columns.size(); ++p) {
        const auto& x = rows[r][p];
        const Rational v = x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>());
        if (v != 0) d.columns[p].emplace_back(r, v);
      }
    }
    return binf_from_cup(d);
  }
  usage("unknown --source kind " + kind);
}

Presentation load_presentation(const Config& c) {
  need(!c.presentation.empty(), "--presentation is required");
  return io::presentation_from_json(as_json_input(c.presentation));
}

// ---- lie ----------------------------------------------------------------

Output lie_dims(const Config& c) {
  need(c.n >= 1 && c.max_deg >= 1, "lie dims needs --n and --max-deg");
  Output o;
  o.csv_header = {"s", "witt_dimension", "lyndon_words"};
  json rows = json::array();
  for (std::size_t s = 1; s <= c.max_deg; ++s) {
    const std::size_t w = witt_dimension(c.n, s);
    const std::size_t l = lyndon_basis(c.n, s).size();
    if (w != l) o.status = 1;
    rows.push_back({{"s", s}, {"witt_dimension", w}, {"lyndon_words", l}});
    o.csv_rows.push_back({std::to_string(s), std::to_string(w), std::to_string(l)});
  }
  o.report = {{"n", c.n}, {"dims", rows}};
  return o;
}

Output lie_magnus_class(const Config& c) {
  const Word w = parse_word(c);
  std::size_t s = c.deg;
  if (s == 0) {
    const auto low = magnus_lowest_degree(w, c.max_deg ? c.max_deg : kMaxMagnusDegree);
    need(low.has_value(), "word has no nonzero Magnus term up to the cap");
    s = *low;
  }
  const LieElement e = magnus_class(w, s);
  json brackets = json::array();
  const auto& basis = lyndon_basis(e.rank(), e.degree());
  for (const auto& [k, x] : e.coeffs()) brackets.push_back(to_string(x) + " " + bracketing_string(basis[k]));
  Output o;
  o.report = {{"word", io::to_json(w)}, {"class", io::to_json(e)}, {"brackets", brackets}};
  return o;
}

Output lie_center_check(const Config& c) {
  need(c.n >= 1 && c.max_deg >= 1, "lie center-check needs --n and --max-deg");
  Output o;
  const bool ok = center_check(c.n, c.max_deg);
  o.report = {{"n", c.n}, {"max_deg", c.max_deg}, {"trivial_center", ok}};
  o.status = ok ? 0 : 1;
  return o;
}

// ---- johnson ------------------------------------------------------------

Output johnson_degree(const Config& c) {
  const Endo a = parse_endo(c);
  const std::size_t cap = c.max_deg ? c.max_deg : kMaxMagnusDegree - 1;
  Output o;
  o.report = {{"endo", io::to_json(a)}, {"cap", cap}, {"degree", johnson_filtration_degree(a, cap)}};
  return o;
}

Output johnson_image_cmd(const Config& c) {
  const Endo a = parse_endo(c);
  need(c.deg >= 1, "johnson image needs --deg");
  const GradedDerivation d = johnson_image(a, c.deg);
  Output o;
  o.report = {{"endo", io::to_json(a)}, {"derivation", io::to_json(d)}};
  return o;
}

Output johnson_ev_psi_check(const Config& c) {
  need(c.n >= 2, "ev-psi-check needs --n >= 2");
  const std::size_t smax = c.max_deg ? c.max_deg : 3;
  Output o;
  o.csv_header = {"n", "s", "basis", "lower_vanish", "sign", "rank_ev_n"};
  json rows = json::array();
  int sigma = 0;
  for (std::size_t s = 1; s <= smax; ++s) {
    c.budget().check("ev-psi-check");
    const PsiCheck p = psi_check(c.n, s);
    if (s == 1) sigma = -p.sign;
    const bool sign_ok = p.basis_size == 0 || (p.sign != 0 && p.sign == sigma * (s % 2 ? -1 : 1));
    if (!p.lower_evaluations_vanish || !sign_ok) o.status = 1;
    rows.push_back({{"s", s}, {"basis", p.basis_size}, {"lower_evaluations_vanish", p.lower_evaluations_vanish},
                    {"sign", p.sign}, {"rank_ev_n", p.rank_ev_n}});
    o.csv_rows.push_back({std::to_string(c.n), std::to_string(s), std::to_string(p.basis_size),
                          p.lower_evaluations_vanish ? "true" : "false", std::to_string(p.sign),
                          std::to_string(p.rank_ev_n)});
  }
  o.report = {{"n", c.n}, {"sigma", sigma}, {"rule", "ev_n psi(w) = sigma (-1)^s [x_n, w]"}, {"table", rows}};
  return o;
}

Output johnson_outer_rank(const Config& c) {
  need(c.n >= 2, "outer-rank needs --n >= 2");
  const std::size_t smax = c.max_deg ? c.max_deg : 3;
  Output o;
  o.csv_header = {"n", "s", "dim_der", "rank_ad", "rank_psi", "rank_psi_mod_inner", "witt_n_minus_1"};
  json rows = json::array();
  for (std::size_t s = 1; s <= smax; ++s) {
    c.budget().check("outer-rank");
    const PsiCheck p = psi_check(c.n, s);
    const std::size_t outer = p.rank_joint - p.rank_ad;
    const std::size_t w = witt_dimension(c.n - 1, s);
    if (outer != w) o.status = 1;
    rows.push_back({{"s", s}, {"dim_der", derivation_space_dim(c.n, s)}, {"rank_ad", p.rank_ad},
                    {"rank_psi", p.rank_psi}, {"rank_psi_mod_inner", outer}, {"witt_n_minus_1", w}});
    o.csv_rows.push_back({std::to_string(c.n), std::to_string(s), std::to_string(derivation_space_dim(c.n, s)),
                          std::to_string(p.rank_ad), std::to_string(p.rank_psi), std::to_string(outer),
                          std::to_string(w)});
  }
  json report{{"n", c.n}, {"table", rows}};
  if (c.n <= 5) report["degree1_johnson_rank"] = pettet_rank(c.n);
  o.report = report;
  return o;
}

// ---- alex ---------------------------------------------------------------

json poly_list(const std::vector<LaurentPoly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Output alex_matrix(const Config& c) {
  const Presentation p = load_presentation(c);
  const AlexanderMatrix m = alexander_matrix(p);
  json rows = json::array(), display = json::array();
  for (const auto& r : m.entries) {
    json row = json::array();
    for (const auto& e : r) row.push_back(io::to_json(e));
    rows.push_back(row);
    display.push_back(poly_list(r));
  }
  json torsion = json::array();
  for (const auto& t : m.ab.torsion) torsion.push_back(t.get_str());
  Output o;
  o.report = {{"presentation", io::to_json(p)},
              {"abelianization", {{"free_rank", m.ab.free_rank}, {"torsion", torsion}, {"images", m.ab.images}}},
              {"matrix", rows},
              {"display", display},
              {"boundary", poly_list(m.boundary)}};
  return o;
}

Output alex_poly(const Config& c) {
  const auto ap = alexander_polynomial(load_presentation(c));
  Output o;
  o.report = {{"delta", ap.delta.to_string()},
              {"free_rank", ap.free_rank},
              {"torsion_dropped", ap.torsion_dropped},
              {"excess_relators", ap.excess_relators},
              {"polynomial", io::to_json(ap.delta)}};
  return o;
}

Output alex_cv_test(const Config& c) {
  const Presentation p = load_presentation(c);
  need(!c.character.empty(), "--character is required");
  const Character rho = io::character_from_json(as_json_input(c.character));
  const std::size_t b = twisted_betti1(p, rho);
  Output o;
  o.report = {{"character", io::to_json(rho)}, {"twisted_betti1", b}, {"d", c.rhs_d}, {"member", b >= c.rhs_d}};
  return o;
}

// ---- bfn ----------------------------------------------------------------

Output bfn_embed_cmd(const Config& c) {
  const Word w = parse_word(c);
  const BFnElement v = bfn_embed(w);
  if (!v.in_kernel()) throw VerificationFailure("bfn-embed", "image outside ker ∂");
  Output o;
  o.report = io::to_json(v, w);
  return o;
}

Output bfn_relcheck(const Config& c) {
  need(c.n >= 3, "relcheck needs --n >= 3");
  const std::size_t n = c.n;
  auto e = [&](std::size_t i, std::size_t j) {
    return bfn_embed(commutator(Word::generator(n, static_cast<int>(i)), Word::generator(n, static_cast<int>(j))));
  };
  std::size_t checked = 0, failed = 0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k) {
        const BFnElement r = augmentation_generator(n, i) * e(j, k) - augmentation_generator(n, j) * e(i, k) +
                             augmentation_generator(n, k) * e(i, j);
        ++checked;
        if (!r.is_zero()) ++failed;
      }
  Output o;
  o.report = {{"n", n}, {"triples", checked}, {"failed", failed}};
  o.status = failed ? 1 : 0;
  return o;
}

// (x_m,x_k) - α(x_m,x_k) = -(v,x_k) and (x_k,v) = (x̄_k-1)(x̄_l-1)(x_i,x_j)
// for v = (x_l,(x_i,x_j)) and α: x_m -> v x_m, on seeded distinct indices.
Output bfn_isq_check(const Config& c) {
  const std::size_t n = c.n ? c.n : 5;
  need(n >= 5, "isq-check needs --n >= 5");
  const std::size_t trials = c.trials ? c.trials : 20;
  std::mt19937_64 rng(c.seed);
  auto g = [&](int a) { return Word::generator(n, a); };
  json cases = json::array();
  std::size_t failed = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<int> idx(n);
    for (std::size_t a = 0; a < n; ++a) idx[a] = static_cast<int>(a) + 1;
    std::shuffle(idx.begin(), idx.end(), rng);
    const int i = idx[0], j = idx[1], k = idx[2], l = idx[3], m = idx[4];
    const Word v = commutator(g(l), commutator(g(i), g(j)));
    const Endo alpha = left_multiply_generator(n, m, v);
    const Word mk = commutator(g(m), g(k));
    const bool first = bfn_embed(mk) - bfn_act(alpha, mk) == -bfn_embed(commutator(v, g(k)));
    const bool second = bfn_embed(commutator(g(k), v)) == augmentation_generator(n, k) *
                                                              augmentation_generator(n, l) *
                                                              bfn_embed(commutator(g(i), g(j)));
    if (!first || !second) ++failed;
    cases.push_back({{"ijklm", {i, j, k, l, m}}, {"first", first}, {"second", second}});
  }
  Output o;
  o.report = {{"n", n}, {"seed", c.seed}, {"trials", trials}, {"failed", failed}, {"cases", cases}};
  o.status = failed ? 1 : 0;
  return o;
}

// ---- rep ----------------------------------------------------------------

Output rep_build_v(const Config& c) {
  need(c.n >= 4, "build-v needs --n >= 4");
  const RepSpace v = build_V(c.n);
  json weights = json::array();
  for (const auto& [w, idx] : v.weight_blocks()) weights.push_back({{"weight", w}, {"multiplicity", idx.size()}});
  const std::size_t maxdim = maximal_vectors(v).size();
  const bool action = verify_action(v);
  Output o;
  o.report = {{"n", c.n},
              {"ambient_dim", v.ambient_dim()},
              {"dimV", v.dim()},
              {"expected_dim", c.n * c.n * (c.n - 1) / 2 - c.n},
              {"maximal_space_dim", maxdim},
              {"action_verified", action},
              {"weights", weights}};
  o.status = action && maxdim == 1 ? 0 : 1;
  return o;
}

Output rep_weyl_dim(const Config& c) {
  need(c.n >= 2 && !c.hw.empty(), "weyl-dim needs --n and --hw a1,..,a_{n-1}");
  const auto hw = parse_hw(c.hw);
  Output o;
  o.report = {{"n", c.n}, {"hw", hw}, {"dim", weyl_dim(hw, c.n).get_str()}};
  return o;
}

Output rep_certify(const Config& c) {
  need(c.n >= 4, "certify-oan needs --n 4 or --n 5");
  const auto cert = certify_vanishing_oan(c.n, c.seed, c.trials, c.budget(), Config::cache_dir());
  Output o;
  o.report = io::to_json(cert);
  if (!cert.failure_stage.empty()) {
    o.report["error"] = {{"stage", cert.failure_stage}, {"detail", cert.failure_detail}};
    o.status = cert.failure_is_resource_limit ? 3 : 1;
  } else {
    o.status = cert.verdict == "vanishing" && (!cert.sampling || cert.sampling->hits == 0) ? 0 : 1;
  }
  return o;
}

// ---- binf ---------------------------------------------------------------

Output binf_dims(const Config& c) {
  const BinfPresentation p = parse_source(c);
  const std::size_t qmax = c.max_deg ? c.max_deg : 4;
  need(qmax >= 2, "--max-deg must be at least 2");
  const auto hol = holonomy_bracket_dims(p, std::min(qmax, kMaxHolonomyDegree));
  Output o;
  o.csv_header = {"q", "binf_dim", "free_bound", "holonomy_dim"};
  json rows = json::array();
  for (std::size_t q = 2; q <= qmax; ++q) {
    const std::size_t d = binf_graded_dim(p, q, c.budget());
    const std::size_t bound = p.annihilator.size() * monomial_count(p.h, q - 2);
    json row{{"q", q}, {"dim", d}, {"free_bound", bound}};
    std::string h = "";
    if (q - 1 < hol.size()) {
      row["holonomy_dim"] = hol[q - 1];
      h = std::to_string(hol[q - 1]);
    }
    rows.push_back(row);
    o.csv_rows.push_back({std::to_string(q), std::to_string(d), std::to_string(bound), h});
  }
  o.report = {{"h", p.h}, {"h2", p.h2}, {"dims", rows}};
  return o;
}

Output binf_total(const Config& c) {
  const BinfPresentation p = parse_source(c);
  const std::size_t cap = c.max_deg ? c.max_deg : 4;
  const BinfTotal t = binf_total_dim(p, cap, c.budget());
  Output o;
  o.report = {{"h", p.h}, {"cap", t.cap}, {"dims", t.dims}, {"status", t.finite ? "finite" : "unresolved"}};
  if (t.finite) o.report["total"] = t.total;
  return o;
}

// ---- suite --------------------------------------------------------------

Output suite_acceptance(const Config& c) {
  suite::Options opt;
  opt.seed = c.seed;
  opt.cache_dir = Config::cache_dir();
  opt.only = c.criteria;
  opt.on_result = [&](const suite::CriterionResult& r) {
    std::cerr << suite::line(r);
    if (c.verbosity > 0) std::cerr << "  (" << r.seconds << " s)";
    std::cerr << std::endl;
  };
  const auto rep = suite::run_acceptance(opt);
  Output o;
  o.report = suite::to_json(rep);
  o.status = rep.all_pass ? 0 : 1;
  return o;
}

void emit(const Config& c, const Output& o, const std::string& command) {
  std::ostringstream text;
  if (c.format == "csv") {
    need(!o.csv_header.empty(), command + " has no CSV form");
    auto row = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) text << (i ? "," : "") << r[i];
      text << '\n';
    };
    row(o.csv_header);
    for (const auto& r : o.csv_rows) row(r);
  } else {
    json full{{"command", command}, {"version", io::kVersion}};
    for (const auto& [k, v] : o.report.items()) full[k] = v;
    text << full.dump(2) << '\n';
  }
  if (c.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream f(c.out);
    if (!f) usage("cannot write " + c.out);
    f << text.str();
  }
}

void print_error(const std::string& stage, const std::string& detail) {
  std::cout << io::error_json(stage, detail).dump(2) << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations around the Torelli group of a free group"};
  app.require_subcommand(1);
  app.set_version_flag("--version", io::kVersion);
  Config cfg;
  std::string command;
  std::function<Output(const Config&)> action;

  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help,
                  std::function<Output(const Config&)> fn) {
    CLI::App* s = group->add_subcommand(name, help);
    s->add_option("--n", cfg.n, "rank / alphabet size");
    s->add_option("--max-deg", cfg.max_deg, "degree cap");
    s->add_option("--seed", cfg.seed, "random seed");
    s->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--out", cfg.out, "write the report here instead of stdout");
    s->add_option("--presentation", cfg.presentation, "presentation JSON (path or inline)");
    s->add_option("--character", cfg.character, "character JSON (path or inline)");
    s->add_option("--trials", cfg.trials, "number of random trials");
    s->add_option("--time-budget-sec", cfg.time_budget, "cooperative wall-clock budget");
    s->add_option("--word", cfg.word, "word, e.g. 1,2,-1,-2");
    s->add_option("--endo", cfg.endo, "conj:i,j | chain:i,j,k | inner:<word> | Endo JSON");
    s->add_option("--deg", cfg.deg, "degree");
    s->add_option("--hw", cfg.hw, "highest weight a1,..,a_{n-1}");
    s->add_option("--source", cfg.source, "free:h | oan:n | cup:<json>");
    s->add_option("--d", cfg.rhs_d, "depth d of V_d");
    s->add_option("--criteria", cfg.criteria, "run only these criteria")->delimiter(',');
    s->add_flag("-v,--verbose", cfg.verbosity, "timings on stderr");
    s->callback([&, fn, full = group->get_name() + " " + name] {
      command = full;
      action = fn;
    });
  };

  auto* lie = app.add_subcommand("lie", "free Lie algebra")->require_subcommand(1);
  leaf(lie, "dims", "Witt dimensions and Lyndon counts", lie_dims);
  leaf(lie, "magnus-class", "class of a word in gr Γ", lie_magnus_class);
  leaf(lie, "center-check", "injectivity of ad on L_n^s", lie_center_check);

  auto* jo = app.add_subcommand("johnson", "Johnson filtration and homomorphism")->require_subcommand(1);
  leaf(jo, "degree", "Johnson filtration level of an automorphism", johnson_degree);
  leaf(jo, "image", "Johnson image of an automorphism", johnson_image_cmd);
  leaf(jo, "ev-psi-check", "evaluations of ψ on the Lyndon basis", johnson_ev_psi_check);
  leaf(jo, "outer-rank", "rank of ψ modulo inner derivations", johnson_outer_rank);

  auto* al = app.add_subcommand("alex", "Fox calculus and Alexander invariants")->require_subcommand(1);
  leaf(al, "matrix", "Alexander matrix", alex_matrix);
  leaf(al, "poly", "Alexander polynomial", alex_poly);
  leaf(al, "cv-test", "characteristic-variety membership", alex_cv_test);

  auto* bf = app.add_subcommand("bfn", "Alexander invariant of F_n")->require_subcommand(1);
  leaf(bf, "embed", "word of F_n' into ker ∂", bfn_embed_cmd);
  leaf(bf, "relcheck", "three-term relations", bfn_relcheck);
  leaf(bf, "isq-check", "Torelli action identities", bfn_isq_check);

  auto* rp = app.add_subcommand("rep", "sl_n modules")->require_subcommand(1);
  leaf(rp, "build-v", "V = ker ad*", rep_build_v);
  leaf(rp, "weyl-dim", "Weyl dimension", rep_weyl_dim);
  leaf(rp, "certify-oan", "vanishing-resonance certificate", rep_certify);

  auto* bi = app.add_subcommand("binf", "infinitesimal Alexander invariant")->require_subcommand(1);
  leaf(bi, "dims", "graded dimensions", binf_dims);
  leaf(bi, "total", "total dimension when it resolves within the cap", binf_total);

  auto* su = app.add_subcommand("suite", "acceptance battery")->require_subcommand(1);
  leaf(su, "acceptance", "run every criterion", suite_acceptance);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    std::cout << io::kVersion << std::endl;
    return 0;
  } catch (const CLI::ParseError& e) {
    // sub-subcommand help surfaces as a parse error with exit code 0
    if (e.get_exit_code() == 0) return app.exit(e);
    print_error("usage", e.what());
    return 2;
  }

  try {
    const Output o = action(cfg);
    emit(cfg, o, command);
    return o.status;
  } catch (const ResourceLimit& e) {
    print_error(e.stage(), e.what());
    return 3;
  } catch (const UnsupportedArity& e) {
    print_error(e.stage(), e.what());
    return 3;
  } catch (const VerificationFailure& e) {
    print_error(e.stage(), e.what());
    return 1;
  } catch (const Error& e) {
    print_error(e.stage(), e.what());
    return 2;
  } catch (const nlohmann::json::exception& e) {
    print_error("input", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    print_error("input", e.what());
    return 2;
  } catch (const std::out_of_range& e) {
    print_error("input", e.what());
    return 2;
  }
}
