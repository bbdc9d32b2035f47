#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "okd/diagrams.hpp"
#include "okd/errors.hpp"
#include "okd/fiber.hpp"
#include "okd/fusion.hpp"
#include "okd/hopf.hpp"
#include "okd/matrix.hpp"
#include "okd/morphisms.hpp"
#include "okd/scalars.hpp"
#include "okd/words.hpp"

namespace okd {

using Json = nlohmann::ordered_json;

// Scalars: "p/q", {"num": [...], "den": [...]} ascending, [re, im].
Json to_json(const Rational& r);
Json to_json(const RationalFunction& f);
Json to_json(const Complex& z);

template <class F>
F scalar_from_json(const Json& j);
template <>
Rational scalar_from_json<Rational>(const Json& j);
template <>
RationalFunction scalar_from_json<RationalFunction>(const Json& j);
template <>
Complex scalar_from_json<Complex>(const Json& j);

Json to_json(const Word& w);
Word word_from_json(const Json& j);

Json to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

Json to_json(const FusionResult& r);
FusionResult fusion_from_json(const Json& j);

/// Parses JSON text, reporting failures as ParseError.
Json parse_json(const std::string& text);

template <Field F>
Json to_json(const Morphism<F>& f) {
  Json terms = Json::array();
  for (const auto& [d, c] : f.terms()) terms.push_back({{"diagram", to_json(d)}, {"coeff", to_json(c)}});
  return {{"domain", to_json(f.domain())}, {"codomain", to_json(f.codomain())}, {"terms", terms}};
}

template <Field F>
Morphism<F> morphism_from_json(const Json& j) {
  try {
    Morphism<F> out(word_from_json(j.at("domain")), word_from_json(j.at("codomain")));
    for (const auto& t : j.at("terms")) {
      out.add_term(diagram_from_json(t.at("diagram")), scalar_from_json<F>(t.at("coeff")));
    }
    return out;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed morphism: ") + e.what());
  }
}

template <Field F>
Json to_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

template <Field F>
Matrix<F> matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a matrix must be an array of rows");
  std::vector<std::vector<F>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("a matrix row must be an array");
    std::vector<F> r;
    for (const auto& e : row) r.push_back(scalar_from_json<F>(e));
    if (!rows.empty() && r.size() != rows.front().size()) throw ParseError("ragged matrix");
    rows.push_back(std::move(r));
  }
  return Matrix<F>::from_rows(rows);
}

template <Field F>
Json to_json(const Tensor<F>& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries) entries.push_back(to_json(e));
  return {{"n", t.n}, {"top", t.top}, {"bottom", t.bottom}, {"entries", entries}};
}

template <Field F>
Json to_json(const RelationSet<F>& rs) {
  Json rels = Json::array();
  for (const auto& rel : rs.relations) {
    Json lhs = Json::array();
    for (const auto& term : rel.lhs) lhs.push_back(Json::array({to_json(term.coeff), term.symbols}));
    rels.push_back({{"lhs", lhs}, {"rhs", to_json(rel.rhs)}});
  }
  Json coproduct = Json::object();
  for (const auto& g : rs.generators) {
    Json pairs = Json::array();
    for (const auto& [x, y] : rs.coproduct.at(g)) pairs.push_back(Json::array({x, y}));
    coproduct[g] = pairs;
  }
  return {{"kind", rs.kind == PresentationKind::Fiber ? "fiber" : "unitary"},
          {"n", rs.n},
          {"gens", rs.generators},
          {"relations", rels},
          {"coproduct", coproduct}};
}

}  // namespace okd
