#pragma once

#include <json.hpp>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "cobcat/cobordism.hpp"
#include "cobcat/decompose.hpp"
#include "cobcat/error.hpp"
#include "cobcat/int_compact.hpp"
#include "cobcat/kleisli.hpp"
#include "cobcat/matrix_instance.hpp"
#include "cobcat/prof.hpp"
#include "cobcat/semiring.hpp"
#include "cobcat/wiring.hpp"

namespace cobcat {

// nlohmann's map-backed value: object keys come out sorted, so dumping the
// same data always yields the same bytes.
using Json = nlohmann::json;

// Structural problems (not JSON, missing or mistyped fields) throw
// ParseError from error.hpp; semantic validation failures keep throwing
// Error.
Json parse_json(const std::string& text);

Json sign_to_json(Sign s);
Sign sign_from_json(const Json& j);
Json signed_set_to_json(const SignedSet& x);
SignedSet signed_set_from_json(const Json& j);
Json word_to_json(const Word& w);
Word word_from_json(const Json& j);
Json loops_to_json(const Loops& l);
Loops loops_from_json(const Json& j);

Json cobordism_to_json(const Cobordism& c);
Cobordism cobordism_from_json(const Json& j);

Json wiring_to_json(const WiringDiagram& w);
WiringDiagram wiring_from_json(const Json& j);

Json kleisli_to_json(const KleisliMap& k);
KleisliMap kleisli_from_json(const Json& j);

Json decomposition_to_json(const StandardDecomposition& d);

Json dims_to_json(const std::map<Label, int>& dims);
std::map<Label, int> dims_from_json(const Json& j);

/// Scalar bridge per semiring. Naturals wider than 64 bits travel as
/// decimal strings; everything else as plain JSON numbers.
template <typename S>
struct JsonScalar;

template <>
struct JsonScalar<NatSemiring> {
  static Json to(const mpz_class& v);
  static mpz_class from(const Json& j);
};
template <>
struct JsonScalar<BoolSemiring> {
  static Json to(unsigned char v);
  static unsigned char from(const Json& j);
};
template <>
struct JsonScalar<F64Semiring> {
  static Json to(double v);
  static double from(const Json& j);
};

/// Member access with a ParseError on absence; keeps schema messages
/// uniform across documents.
const Json& field(const Json& j, const char* key);
/// The "semiring" field as a string.
std::string semiring_of(const Json& j);

long long word_total_dim(const std::map<Label, int>& dims, const Word& w);

/// Morphism documents: dims, semiring, boundary words, and the dense
/// entries row-major (rows indexed by cod, columns by dom).
template <typename S>
Json matrix_doc(const Matrix<S>& m, const Word& dom, const Word& cod,
                const std::map<Label, int>& dims) {
  Json entries = Json::array();
  for (const auto& v : to_dense(m)) entries.push_back(JsonScalar<S>::to(v));
  return Json{{"cod", word_to_json(cod)},
              {"dims", dims_to_json(dims)},
              {"dom", word_to_json(dom)},
              {"entries", std::move(entries)},
              {"semiring", S::name()}};
}

template <typename S>
Matrix<S> matrix_from_doc(const Json& j, const std::map<Label, int>& dims,
                          const Word& dom, const Word& cod) {
  const Json& je = field(j, "entries");
  if (!je.is_array()) throw ParseError("entries must be a flat array");
  std::vector<typename S::value_type> data;
  data.reserve(je.size());
  for (const Json& v : je) data.push_back(JsonScalar<S>::from(v));
  return from_dense<S>(word_total_dim(dims, cod), word_total_dim(dims, dom),
                       data);
}

Json int_object_to_json(const IntObject& a);
IntObject int_object_from_json(const Json& j);

/// Doubled-category morphism documents: the payload entries together with
/// both boundary object pairs, dims and semiring.
template <typename S>
IntMorphism int_from_doc(const MatrixInstance<S>& t, const Json& j) {
  const IntObject src = int_object_from_json(field(j, "source"));
  const IntObject tgt = int_object_from_json(field(j, "target"));
  const Word pdom = concat(src.neg, tgt.pos);
  const Word pcod = concat(src.pos, tgt.neg);
  Matrix<S> m = matrix_from_doc<S>(j, t.dims(), pdom, pcod);
  return make_int(t, src, tgt, t.make_mor(std::move(m), pdom, pcod));
}

template <typename S>
Json int_to_doc(const MatrixInstance<S>& t, const IntMorphism& f) {
  Json entries = Json::array();
  for (const auto& v : to_dense(t.mat(f.payload)))
    entries.push_back(JsonScalar<S>::to(v));
  return Json{{"dims", dims_to_json(t.dims())},
              {"entries", std::move(entries)},
              {"semiring", S::name()},
              {"source", int_object_to_json(f.source)},
              {"target", int_object_to_json(f.target)}};
}

Json category_to_json(const FiniteCategory& c);
FiniteCategory category_from_json(const Json& j);

/// A finite category together with a monoid over it; heap-allocated so the
/// module's base pointers stay valid.
struct ProfDoc {
  FiniteCategory category;
  ProfMonoid monoid;
};
std::unique_ptr<ProfDoc> prof_from_json(const Json& j);
Json prof_to_json(const ProfDoc& d);

}  // namespace cobcat
