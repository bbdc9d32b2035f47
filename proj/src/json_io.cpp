#include "okd/json_io.hpp"

#include <cmath>
#include <limits>

namespace okd {

namespace {

Json polynomial_to_json(const RationalPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

RationalPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial coefficients must be an array");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(scalar_from_json<Rational>(e));
  return RationalPolynomial(c);
}

BoundaryPoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_unsigned()) {
    throw ParseError("boundary point must be [\"top\"|\"bottom\", index], got " + j.dump());
  }
  const std::string side = j[0].get<std::string>();
  if (side != "top" && side != "bottom") throw ParseError("unknown side \"" + side + "\"");
  return {side == "top" ? Side::Top : Side::Bottom, j[1].get<std::size_t>()};
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const RationalFunction& f) {
  return {{"num", polynomial_to_json(f.numerator())}, {"den", polynomial_to_json(f.denominator())}};
}

Json to_json(const Complex& z) {
  const auto clean = [](double v) { return v == 0.0 ? 0.0 : v; };
  return Json::array({clean(z.real()), clean(z.imag())});
}

template <>
Rational scalar_from_json<Rational>(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational \"p/q\", got " + j.dump());
}

template <>
RationalFunction scalar_from_json<RationalFunction>(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("num")) throw ParseError("rational function needs \"num\"");
    const RationalPolynomial num = polynomial_from_json(j.at("num"));
    const RationalPolynomial den = j.contains("den") ? polynomial_from_json(j.at("den"))
                                                     : RationalPolynomial(Rational(1));
    return RationalFunction(num, den);
  }
  return RationalFunction(scalar_from_json<Rational>(j));
}

template <>
Complex scalar_from_json<Complex>(const Json& j) {
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  if (j.is_number()) return Complex(j.get<double>());
  if (j.is_string()) return Complex(scalar_from_json<Rational>(j));
  throw ParseError("expected a complex [re, im], got " + j.dump());
}

Json to_json(const Word& w) {
  Json out = Json::array();
  for (const Letter l : w) out.push_back(to_string(l));
  return out;
}

Word word_from_json(const Json& j) {
  if (j.is_string()) return Word::parse(j.get<std::string>());
  if (!j.is_array()) throw ParseError("a word must be an array of \"x\"/\"x*\", got " + j.dump());
  std::vector<Letter> letters;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError("word letters must be strings");
    const Word one = Word::parse(e.get<std::string>());
    if (one.size() != 1) throw ParseError("expected one letter, got \"" + e.get<std::string>() + "\"");
    letters.push_back(one[0]);
  }
  return Word(std::move(letters));
}

Json to_json(const Diagram& d) {
  const auto side = [](Side s) { return s == Side::Top ? "top" : "bottom"; };
  Json arcs = Json::array();
  for (const auto& [p, q] : d.arcs()) {
    arcs.push_back(Json::array({Json::array({side(p.side), p.index}), Json::array({side(q.side), q.index})}));
  }
  return {{"top", to_json(d.top())}, {"bottom", to_json(d.bottom())}, {"arcs", arcs}};
}

Diagram diagram_from_json(const Json& j) {
  try {
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw ParseError("an arc is a pair of boundary points");
      arcs.emplace_back(point_from_json(a[0]), point_from_json(a[1]));
    }
    return Diagram::from_arcs(word_from_json(j.at("top")), word_from_json(j.at("bottom")), arcs);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed diagram: ") + e.what());
  }
}

Json to_json(const FusionResult& r) {
  Json labels = Json::array();
  for (const auto& [w, m] : r) labels.push_back({{"word", to_json(w)}, {"mult", m}});
  return {{"labels", labels}};
}

FusionResult fusion_from_json(const Json& j) {
  try {
    FusionResult out;
    for (const auto& l : j.at("labels")) {
      const long m = l.at("mult").get<long>();
      if (m < 1) throw ParseError("multiplicities must be positive");
      out[word_from_json(l.at("word"))] += m;
    }
    return out;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed fusion result: ") + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace okd
