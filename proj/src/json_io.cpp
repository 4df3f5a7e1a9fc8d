#include "cobcat/json_io.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace cobcat {

namespace {

int to_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string("expected an integer for ") + what);
  return j.get<int>();
}

std::string to_str(const Json& j, const char* what) {
  if (!j.is_string())
    throw ParseError(std::string("expected a string for ") + what);
  return j.get<std::string>();
}

std::vector<int> int_vec(const Json& j, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string("expected an array for ") + what);
  std::vector<int> out;
  out.reserve(j.size());
  for (const Json& e : j) out.push_back(to_int(e, what));
  return out;
}

std::vector<std::vector<int>> int_table(const Json& j, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string("expected a table for ") + what);
  std::vector<std::vector<int>> out;
  out.reserve(j.size());
  for (const Json& row : j) out.push_back(int_vec(row, what));
  return out;
}

Json int_table_to_json(const std::vector<std::vector<int>>& t) {
  Json rows = Json::array();
  for (const auto& row : t) rows.push_back(row);
  return rows;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("not valid JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field: ") + key);
  return *it;
}

std::string semiring_of(const Json& j) {
  const Json& s = field(j, "semiring");
  if (!s.is_string()) throw ParseError("semiring must be a string");
  return s.get<std::string>();
}

long long word_total_dim(const std::map<Label, int>& dims, const Word& w) {
  long long t = 1;
  for (const Label& l : w) {
    const auto it = dims.find(l);
    if (it == dims.end()) fail(Errc::unknown_label, "no dimension for " + l);
    t *= it->second;
  }
  return t;
}

Json int_object_to_json(const IntObject& a) {
  return Json{{"neg", word_to_json(a.neg)}, {"pos", word_to_json(a.pos)}};
}

IntObject int_object_from_json(const Json& j) {
  return IntObject{word_from_json(field(j, "neg")),
                   word_from_json(field(j, "pos"))};
}

Json sign_to_json(Sign s) { return s == Sign::plus ? "+" : "-"; }

Sign sign_from_json(const Json& j) {
  const std::string s = to_str(j, "a sign");
  if (s == "+") return Sign::plus;
  if (s == "-") return Sign::minus;
  throw ParseError("a sign must be \"+\" or \"-\"");
}

Json signed_set_to_json(const SignedSet& x) {
  Json out = Json::array();
  for (const SignedPoint& p : x.points)
    out.push_back(Json{{"label", p.label}, {"sign", sign_to_json(p.sign)}});
  return out;
}

SignedSet signed_set_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a signed set must be an array");
  SignedSet x;
  for (const Json& p : j)
    x.points.push_back(SignedPoint{to_str(field(p, "label"), "a label"),
                                   sign_from_json(field(p, "sign"))});
  return x;
}

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (const Label& l : w) out.push_back(l);
  return out;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a word must be an array of labels");
  Word w;
  for (const Json& l : j) w.push_back(to_str(l, "a label"));
  return w;
}

Json loops_to_json(const Loops& l) {
  Json out = Json::object();
  for (const auto& [label, count] : l) out[label] = count;
  return out;
}

Loops loops_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("loops must be an object");
  Loops l;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer())
      throw ParseError("loop counts must be integers");
    l[key] = value.get<std::int64_t>();
  }
  return l;
}

namespace {

Json endpoint_to_json(const Endpoint& e) {
  return Json{{"index", e.pos}, {"side", e.side == Side::dom ? "dom" : "cod"}};
}

Endpoint endpoint_from_json(const Json& j) {
  const std::string side = to_str(field(j, "side"), "a side");
  if (side != "dom" && side != "cod")
    throw ParseError("an endpoint side must be \"dom\" or \"cod\"");
  return Endpoint{side == "dom" ? Side::dom : Side::cod,
                  to_int(field(j, "index"), "an endpoint index")};
}

}  // namespace

Json cobordism_to_json(const Cobordism& c) {
  Json arcs = Json::array();
  for (const Arc& a : c.arcs)
    arcs.push_back(Json::array({endpoint_to_json(a.a), endpoint_to_json(a.b)}));
  return Json{{"arcs", arcs},
              {"cod", signed_set_to_json(c.cod)},
              {"dom", signed_set_to_json(c.dom)},
              {"loops", loops_to_json(c.loops)}};
}

Cobordism cobordism_from_json(const Json& j) {
  const SignedSet dom = signed_set_from_json(field(j, "dom"));
  const SignedSet cod = signed_set_from_json(field(j, "cod"));
  const Json& jarcs = field(j, "arcs");
  if (!jarcs.is_array()) throw ParseError("arcs must be an array");
  std::vector<Arc> arcs;
  for (const Json& a : jarcs) {
    if (!a.is_array() || a.size() != 2)
      throw ParseError("an arc must be a pair of endpoints");
    arcs.push_back(Arc{endpoint_from_json(a[0]), endpoint_from_json(a[1])});
  }
  Loops loops;
  if (j.is_object() && j.contains("loops")) loops = loops_from_json(j["loops"]);
  return make_cobordism(dom, cod, std::move(arcs), std::move(loops));
}

namespace {

Json wire_end_to_json(const WireEnd& e) {
  Json box = e.is_outer() ? Json("outer") : Json(e.box);
  return Json{{"box", std::move(box)}, {"index", e.pos}};
}

WireEnd wire_end_from_json(const Json& j) {
  const Json& b = field(j, "box");
  WireEnd e;
  if (b.is_string()) {
    if (b.get<std::string>() != "outer")
      throw ParseError("a wire box must be a number or \"outer\"");
    e.box = WireEnd::outer;
  } else {
    e.box = to_int(b, "a box number");
  }
  e.pos = to_int(field(j, "index"), "a wire index");
  return e;
}

}  // namespace

Json wiring_to_json(const WiringDiagram& w) {
  Json inner = Json::array();
  for (const SignedSet& x : w.inner) inner.push_back(signed_set_to_json(x));
  Json wires = Json::array();
  for (const Wire& wire : w.wires)
    wires.push_back(
        Json::array({wire_end_to_json(wire.a), wire_end_to_json(wire.b)}));
  return Json{{"inner", inner},
              {"loops", loops_to_json(w.loops)},
              {"outer", signed_set_to_json(w.outer)},
              {"wires", wires}};
}

WiringDiagram wiring_from_json(const Json& j) {
  const Json& jinner = field(j, "inner");
  if (!jinner.is_array()) throw ParseError("inner boxes must be an array");
  std::vector<SignedSet> inner;
  for (const Json& x : jinner) inner.push_back(signed_set_from_json(x));
  const SignedSet outer = signed_set_from_json(field(j, "outer"));
  const Json& jwires = field(j, "wires");
  if (!jwires.is_array()) throw ParseError("wires must be an array");
  std::vector<Wire> wires;
  for (const Json& w : jwires) {
    if (!w.is_array() || w.size() != 2)
      throw ParseError("a wire must be a pair of ends");
    wires.push_back(Wire{wire_end_from_json(w[0]), wire_end_from_json(w[1])});
  }
  Loops loops;
  if (j.is_object() && j.contains("loops")) loops = loops_from_json(j["loops"]);
  return make_wiring(std::move(inner), std::move(outer), std::move(wires),
                     std::move(loops));
}

Json kleisli_to_json(const KleisliMap& k) {
  Json assignment = Json::object();
  for (const auto& [label, word] : k.assignment) {
    Json jw = Json::array();
    for (const KLetter& l : word)
      jw.push_back(Json{{"inv", l.involution}, {"label", l.label}});
    assignment[label] = std::move(jw);
  }
  return Json{{"assignment", std::move(assignment)},
              {"source", word_to_json(k.source.labels)},
              {"target", word_to_json(k.target.labels)}};
}

KleisliMap kleisli_from_json(const Json& j) {
  const Word source = word_from_json(field(j, "source"));
  const Word target = word_from_json(field(j, "target"));
  const Json& ja = field(j, "assignment");
  if (!ja.is_object()) throw ParseError("the assignment must be an object");
  std::map<Label, KWord> assignment;
  for (const auto& [label, jw] : ja.items()) {
    if (!jw.is_array())
      throw ParseError("each assigned word must be an array");
    KWord w;
    for (const Json& l : jw) {
      KLetter letter;
      letter.label = to_str(field(l, "label"), "a letter");
      if (l.contains("inv")) {
        if (!l["inv"].is_boolean())
          throw ParseError("the involution mark must be a boolean");
        letter.involution = l["inv"].get<bool>();
      }
      w.push_back(std::move(letter));
    }
    assignment[label] = std::move(w);
  }
  return make_kleisli(make_label_set(source), make_label_set(target),
                      std::move(assignment));
}

Json decomposition_to_json(const StandardDecomposition& d) {
  return Json{{"A", word_to_json(d.A)},
              {"B", word_to_json(d.B)},
              {"C", word_to_json(d.C)},
              {"D", word_to_json(d.D)},
              {"E", loops_to_json(d.E)},
              {"perm_cod", cobordism_to_json(d.perm_cod)},
              {"perm_dom", cobordism_to_json(d.perm_dom)}};
}

Json dims_to_json(const std::map<Label, int>& dims) {
  Json out = Json::object();
  for (const auto& [label, n] : dims) out[label] = n;
  return out;
}

std::map<Label, int> dims_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("dims must be an object");
  std::map<Label, int> dims;
  for (const auto& [label, n] : j.items())
    dims[label] = to_int(n, "a dimension");
  return dims;
}

Json JsonScalar<NatSemiring>::to(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

mpz_class JsonScalar<NatSemiring>::from(const Json& j) {
  if (j.is_number_integer()) {
    const long long v = j.get<long long>();
    if (v < 0) throw ParseError("natural entries cannot be negative");
    return mpz_class(static_cast<long>(v));
  }
  if (j.is_string()) {
    try {
      mpz_class v(j.get<std::string>(), 10);
      if (v < 0) throw ParseError("natural entries cannot be negative");
      return v;
    } catch (const std::invalid_argument&) {
      throw ParseError("natural entries must be decimal digits");
    }
  }
  throw ParseError("natural entries must be integers or decimal strings");
}

Json JsonScalar<BoolSemiring>::to(unsigned char v) { return v ? 1 : 0; }

unsigned char JsonScalar<BoolSemiring>::from(const Json& j) {
  if (j.is_boolean()) return j.get<bool>() ? 1 : 0;
  if (j.is_number_integer()) {
    const long long v = j.get<long long>();
    if (v == 0 || v == 1) return static_cast<unsigned char>(v);
  }
  throw ParseError("boolean entries must be 0 or 1");
}

Json JsonScalar<F64Semiring>::to(double v) {
  if (!std::isfinite(v))
    fail(Errc::overflow, "cannot serialize a non-finite value");
  return v;
}

double JsonScalar<F64Semiring>::from(const Json& j) {
  if (!j.is_number()) throw ParseError("float entries must be numbers");
  return j.get<double>();
}

Json category_to_json(const FiniteCategory& c) {
  Json morphisms = Json::array();
  for (int m = 0; m < c.n_mor(); ++m)
    morphisms.push_back(Json{{"cod", c.mor_cod[m]},
                             {"dom", c.mor_dom[m]},
                             {"name", c.mor_name[m]}});
  Json out{{"comp", int_table_to_json(c.comp)},
           {"identities", c.identities},
           {"morphisms", std::move(morphisms)},
           {"name", c.name},
           {"objects", c.objects}};
  if (c.monoidal) {
    Json tensor{{"mor", int_table_to_json(c.tensor_mor)},
                {"obj", int_table_to_json(c.tensor_obj)},
                {"sym", int_table_to_json(c.sym)},
                {"unit", c.unit_obj}};
    out["tensor"] = std::move(tensor);
  }
  if (c.compact)
    out["duals"] =
        Json{{"eps", c.eps}, {"eta", c.eta}, {"obj", c.dual_obj}};
  return out;
}

FiniteCategory category_from_json(const Json& j) {
  FiniteCategory c;
  if (j.contains("name")) c.name = to_str(j["name"], "the category name");
  const Json& jobjs = field(j, "objects");
  if (!jobjs.is_array()) throw ParseError("objects must be an array");
  for (const Json& o : jobjs) c.objects.push_back(to_str(o, "an object name"));
  const Json& jmors = field(j, "morphisms");
  if (!jmors.is_array()) throw ParseError("morphisms must be an array");
  const int no = c.n_obj();
  c.hom.assign(no, std::vector<std::vector<MorId>>(no));
  for (const Json& m : jmors) {
    const int dom = to_int(field(m, "dom"), "a morphism boundary");
    const int cod = to_int(field(m, "cod"), "a morphism boundary");
    if (dom < 0 || dom >= no || cod < 0 || cod >= no)
      throw ParseError("a morphism boundary is out of range");
    c.hom[dom][cod].push_back(c.n_mor());
    c.mor_dom.push_back(dom);
    c.mor_cod.push_back(cod);
    c.mor_name.push_back(to_str(field(m, "name"), "a morphism name"));
  }
  c.identities = int_vec(field(j, "identities"), "identities");
  c.comp = int_table(field(j, "comp"), "the composition table");
  if (j.contains("tensor")) {
    const Json& t = j["tensor"];
    c.monoidal = true;
    c.unit_obj = to_int(field(t, "unit"), "the tensor unit");
    c.tensor_obj = int_table(field(t, "obj"), "the object tensor table");
    c.tensor_mor = int_table(field(t, "mor"), "the morphism tensor table");
    c.sym = int_table(field(t, "sym"), "the symmetry table");
  }
  if (j.contains("duals")) {
    const Json& d = j["duals"];
    c.compact = true;
    c.dual_obj = int_vec(field(d, "obj"), "the dual objects");
    c.eta = int_vec(field(d, "eta"), "the bent-pair units");
    c.eps = int_vec(field(d, "eps"), "the bent-pair counits");
  }
  return c;
}

std::unique_ptr<ProfDoc> prof_from_json(const Json& j) {
  auto doc = std::make_unique<ProfDoc>();
  doc->category = category_from_json(field(j, "category"));
  const FiniteCategory& c = doc->category;
  const Json& jm = field(j, "monoid");
  ProfMonoid& n = doc->monoid;
  n.m.src = &c;
  n.m.dst = &c;
  const Json& jelems = field(jm, "elements");
  if (!jelems.is_array()) throw ParseError("elements must be an array");
  const int no = c.n_obj();
  n.m.cells.assign(no, std::vector<std::vector<ElemId>>(no));
  for (const Json& e : jelems) {
    const int src = to_int(field(e, "src"), "an element boundary");
    const int dst = to_int(field(e, "dst"), "an element boundary");
    if (src < 0 || src >= no || dst < 0 || dst >= no)
      throw ParseError("an element boundary is out of range");
    n.m.cells[src][dst].push_back(n.m.n_elem());
    n.m.elem_src.push_back(src);
    n.m.elem_dst.push_back(dst);
    n.m.elem_name.push_back(to_str(field(e, "name"), "an element name"));
  }
  n.m.left = int_table(field(jm, "left"), "the left action table");
  n.m.right = int_table(field(jm, "right"), "the right action table");
  n.unit = int_vec(field(jm, "unit"), "the unit table");
  n.mult = int_table(field(jm, "mult"), "the multiplication table");
  if (jm.contains("pairing")) {
    const Json& p = jm["pairing"];
    n.m.monoidal_data = true;
    n.m.box = int_table(field(p, "box"), "the pairing table");
    n.m.unit_elem = to_int(field(p, "unit_elem"), "the pairing unit");
  }
  return doc;
}

Json prof_to_json(const ProfDoc& d) {
  const ProfMonoid& n = d.monoid;
  Json elements = Json::array();
  for (int e = 0; e < n.m.n_elem(); ++e)
    elements.push_back(Json{{"dst", n.m.elem_dst[e]},
                            {"name", n.m.elem_name[e]},
                            {"src", n.m.elem_src[e]}});
  Json jm{{"elements", std::move(elements)},
          {"left", int_table_to_json(n.m.left)},
          {"mult", int_table_to_json(n.mult)},
          {"right", int_table_to_json(n.m.right)},
          {"unit", n.unit}};
  if (n.m.monoidal_data)
    jm["pairing"] =
        Json{{"box", int_table_to_json(n.m.box)}, {"unit_elem", n.m.unit_elem}};
  return Json{{"category", category_to_json(d.category)},
              {"monoid", std::move(jm)}};
}

}  // namespace cobcat
