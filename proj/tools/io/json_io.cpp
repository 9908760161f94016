#include "json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "torelli/error.hpp"

namespace torelli::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw PreconditionError("input", what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t count_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    bad(std::string("field \"") + name + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  bad("expected an integer or a \"p/q\" string");
}

Integer integer_from_json(const json& v) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    Integer x;
    if (x.set_str(v.get<std::string>(), 10) != 0) bad("bad integer " + v.get<std::string>());
    return x;
  }
  bad("expected an integer coefficient");
}

// Integers that fit in a long go out as numbers, everything else as strings.
json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

std::vector<int> letters_from_json(const json& j) {
  if (!j.is_array()) bad("a word is an array of signed integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad("word letters must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::size_t max_letter(const std::vector<int>& w) {
  std::size_t m = 0;
  for (int x : w) m = std::max<std::size_t>(m, static_cast<std::size_t>(std::abs(x)));
  return m;
}

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Word word_from_json(const json& j, std::size_t rank) {
  auto letters = letters_from_json(j);
  if (rank == 0) rank = max_letter(letters);
  return Word(rank, std::move(letters));
}

json to_json(const Word& w) { return w.letters(); }

Presentation presentation_from_json(const json& j) {
  Presentation p;
  p.generators = count_field(j, "generators");
  const json& rel = field(j, "relators");
  if (!rel.is_array()) bad("\"relators\" must be an array");
  for (const auto& r : rel) p.relators.push_back(word_from_json(r, p.generators));
  return p;
}

json to_json(const Presentation& p) {
  json rel = json::array();
  for (const auto& r : p.relators) rel.push_back(to_json(r));
  return {{"generators", p.generators}, {"relators", rel}};
}

Endo endo_from_json(const json& j) {
  const std::size_t n = count_field(j, "rank");
  auto words = [&](const json& a) {
    if (!a.is_array() || a.size() != n) bad("need one image per generator");
    std::vector<Word> out;
    for (const auto& w : a) out.push_back(word_from_json(w, n));
    return out;
  };
  std::optional<std::vector<Word>> inv;
  if (j.contains("inverse") && !j.at("inverse").is_null()) inv = words(j.at("inverse"));
  Endo e(n, words(field(j, "images")), inv);
  if (inv && !e.verify_inverse()) bad("\"inverse\" is not inverse to \"images\"");
  return e;
}

json to_json(const Endo& e) {
  json im = json::array();
  for (const auto& w : e.images()) im.push_back(to_json(w));
  json out{{"rank", e.rank()}, {"images", im}};
  if (e.has_inverse()) {
    json inv = json::array();
    for (const auto& w : *e.inverse_images()) inv.push_back(to_json(w));
    out["inverse"] = inv;
  }
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  const std::size_t vars = count_field(j, "vars");
  LaurentPoly::Terms terms;
  for (const auto& t : field(j, "terms")) {
    LaurentPoly::Exponent e;
    for (const auto& x : field(t, "exp")) {
      if (!x.is_number_integer()) bad("exponents must be integers");
      e.push_back(x.get<int>());
    }
    if (e.size() != vars) bad("exponent length differs from \"vars\"");
    terms[e] += integer_from_json(field(t, "coef"));
  }
  return LaurentPoly(vars, std::move(terms));
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", integer_json(c)}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

Character character_from_json(const json& j) {
  if (j.is_array()) {
    std::vector<Rational> v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return Character::rational(v);
  }
  const std::size_t m = count_field(j, "conductor");
  if (m == 0) bad("conductor must be positive");
  std::vector<Character::Coord> coords;
  for (const auto& c : field(j, "coords")) {
    const Rational r = c.contains("rational") ? rational_from_json(c.at("rational")) : Rational(1);
    const long k = c.contains("power") ? c.at("power").get<long>() : 0;
    coords.push_back({r, k});
  }
  return Character(static_cast<unsigned>(m), std::move(coords));
}

json to_json(const Character& c) {
  json coords = json::array();
  for (const auto& x : c.coords()) coords.push_back({{"rational", to_string(x.scale)}, {"power", x.power}});
  return {{"conductor", c.conductor()}, {"coords", coords}};
}

LieElement lie_from_json(const json& j) {
  const std::size_t n = count_field(j, "rank");
  const std::size_t s = count_field(j, "degree");
  LieElement e = LieElement::zero(n, s);
  for (const auto& t : field(j, "terms")) {
    const auto w = letters_from_json(field(t, "lyndon"));
    if (w.size() != s) bad("Lyndon word length differs from \"degree\"");
    if (!is_lyndon(w)) bad("not a Lyndon word");
    for (int x : w)
      if (x < 1 || static_cast<std::size_t>(x) > n) bad("Lyndon letter outside 1..rank");
    e += LieElement::basis(n, w, rational_from_json(field(t, "coef")));
  }
  return e;
}

json to_json(const LieElement& e) {
  json terms = json::array();
  const auto& words = lyndon_basis(e.rank(), e.degree());
  for (const auto& [k, c] : e.coeffs()) terms.push_back({{"lyndon", words[k]}, {"coef", to_string(c)}});
  return {{"rank", e.rank()}, {"degree", e.degree()}, {"terms", terms}};
}

GradedDerivation derivation_from_json(const json& j) {
  const std::size_t n = count_field(j, "rank");
  const std::size_t s = count_field(j, "degree");
  std::vector<LieElement> images;
  for (const auto& im : field(j, "images")) images.push_back(lie_from_json(im));
  return GradedDerivation(n, s, std::move(images));
}

json to_json(const GradedDerivation& d) {
  json im = json::array();
  for (const auto& e : d.images()) im.push_back(to_json(e));
  return {{"rank", d.rank()}, {"degree", d.degree()}, {"images", im}};
}

json to_json(const BFnElement& v, const Word& representative) {
  json entries = json::array();
  for (const auto& p : v.entries()) entries.push_back(to_json(p));
  json text = json::array();
  for (const auto& p : v.entries()) text.push_back(p.to_string());
  return {{"rank", v.rank()}, {"word", to_json(representative)}, {"entries", entries}, {"display", text}};
}

json to_json(const ResonanceCertificate& c) {
  json out{{"n", c.n},
           {"dimV", c.dimV},
           {"dimK", c.dimK},
           {"weight_v0", c.weight_v0},
           {"maximal_space_dim", c.maximal_space_dim},
           {"ker_lambda_v0_dim", c.ker_lambda_v0_dim},
           {"verdict", c.verdict}};
  if (c.sampling) out["sampling"] = {{"seed", c.sampling->seed}, {"trials", c.sampling->trials}, {"hits", c.sampling->hits}};
  out["details"] = {{"lambda", c.lambda},
                    {"mu", c.mu},
                    {"weyl_dim_mu", c.weyl_dim_mu},
                    {"dim_wedge2V", c.dim_wedge2V},
                    {"dimH2", c.dimH2},
                    {"u0_space_dim", c.u0_space_dim},
                    {"ad_star_kills_v0", c.ad_star_kills_v0},
                    {"raising_operators_kill_v0", c.raising_kill_v0},
                    {"weight_v0_is_lambda", c.weight_v0_is_lambda},
                    {"v0_generates_V", c.v0_generates_V}};
  out["reasoning"] = c.reasoning;
  if (!c.failure_stage.empty()) out["failure"] = {{"stage", c.failure_stage}, {"detail", c.failure_detail}};
  return out;
}

json error_json(const std::string& stage, const std::string& detail) {
  return {{"error", {{"stage", stage}, {"detail", detail}}}};
}

}  // namespace torelli::io
