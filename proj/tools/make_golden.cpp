// Regenerates the golden document corpus used by the CLI determinism
// tests. Every document is emitted through the canonical serializers, so
// re-normalizing any of them must reproduce the file bytes exactly.
//
// Usage: make_golden <output-dir>
#include <fstream>
#include <iostream>
#include <string>

#include "cobcat/cobordism.hpp"
#include "cobcat/json_io.hpp"
#include "cobcat/kleisli.hpp"
#include "cobcat/matrix_instance.hpp"
#include "cobcat/prof.hpp"
#include "cobcat/semiring.hpp"
#include "cobcat/wiring.hpp"

using namespace cobcat;

namespace {

std::string out_dir;
int written = 0;

void put(const std::string& name, const Json& doc) {
  const std::string path = out_dir + "/" + name + ".json";
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    std::exit(1);
  }
  out << doc.dump() << '\n';
  ++written;
}

SignedSet ss(std::string_view text) { return parse_signed_set(text); }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_golden <output-dir>\n";
    return 1;
  }
  out_dir = argv[1];

  // Matchings.
  put("cob_cup", cobordism_to_json(cup(ss("a+"))));
  put("cob_cap", cobordism_to_json(cap(ss("a+"))));
  put("cob_identity", cobordism_to_json(identity(ss("a- b+ c-"))));
  put("cob_symmetry", cobordism_to_json(symmetry(ss("a- b+"), ss("c+"))));
  put("cob_loops",
      cobordism_to_json(make_cobordism({}, {}, {}, {{"a", 2}, {"b", 1}})));
  put("cob_mixed",
      cobordism_to_json(make_cobordism(
          ss("a- b+ a+"), ss("a+ b+ a-"),
          {Arc{dom_pt(1), cod_pt(3)}, Arc{dom_pt(2), cod_pt(2)},
           Arc{dom_pt(3), cod_pt(1)}},
          {{"c", 1}})));

  // Wiring diagrams.
  put("wd_identity", wiring_to_json(identity_wiring(ss("a- b+"))));
  put("wd_two_box",
      wiring_to_json(make_wiring(
          {ss("a- b+"), ss("b- a+")}, ss("a- a+"),
          {Wire{{0, 1}, {WireEnd::outer, 1}},
           Wire{{0, 2}, {1, 1}},
           Wire{{1, 2}, {WireEnd::outer, 2}}})));
  put("wd_closed",
      wiring_to_json(make_wiring({ss("a- a+")}, ss(""),
                                 {Wire{{0, 1}, {0, 2}}}, {{"b", 1}})));

  // Word maps.
  put("kleisli_expand",
      kleisli_to_json(make_kleisli(
          make_label_set({"a", "b"}), make_label_set({"x", "y", "z"}),
          {{"a", {KLetter{"x", false}, KLetter{"y", true}}},
           {"b", {KLetter{"z", false}}}})));
  put("kleisli_flip",
      kleisli_to_json(make_kleisli(make_label_set({"x"}),
                                   make_label_set({"x"}),
                                   {{"x", {KLetter{"x", true}}}})));

  // Morphism documents, one per semiring. The first carries an entry far
  // beyond 64 bits to pin the decimal-string fallback.
  {
    const std::map<Label, int> dims{{"a", 2}};
    Matrix<NatSemiring> m(2, 2);
    mpz_class big = 1;
    big <<= 80;
    m.set(0, 0, big);
    m.set(1, 0, 7);
    m.set(1, 1, 1);
    put("morphism_nat", matrix_doc(m, {"a"}, {"a"}, dims));
  }
  {
    const std::map<Label, int> dims{{"a", 2}, {"b", 2}};
    Matrix<BoolSemiring> m(4, 2);
    m.set(0, 0, 1);
    m.set(2, 1, 1);
    m.set(3, 1, 1);
    put("morphism_bool", matrix_doc(m, {"a"}, {"a", "b"}, dims));
  }
  {
    const std::map<Label, int> dims{{"a", 2}};
    Matrix<F64Semiring> m(2, 2);
    m.set(0, 0, 0.5);
    m.set(0, 1, -2.25);
    m.set(1, 1, 3.0);
    put("morphism_f64", matrix_doc(m, {"a"}, {"a"}, dims));
  }

  // Doubled-category morphisms.
  {
    MatrixInstance<NatSemiring> t({{"a", 2}});
    Matrix<NatSemiring> m(2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 2);
    m.set(1, 0, 3);
    m.set(1, 1, 4);
    const IntObject src{{"a"}, {}}, tgt{{"a"}, {}};
    put("int_nat", int_to_doc(t, make_int(t, src, tgt,
                                          t.make_mor(m, {"a"}, {"a"}))));
  }
  {
    MatrixInstance<BoolSemiring> t({{"a", 2}});
    Matrix<BoolSemiring> m(1, 4);
    m.set(0, 0, 1);
    m.set(0, 3, 1);
    const IntObject src{{}, {}}, tgt{{}, {"a", "a"}};
    put("int_bool", int_to_doc(t, make_int(t, src, tgt,
                                           t.make_mor(m, {"a", "a"}, {}))));
  }

  // Finite module instances over table categories.
  {
    auto doc = std::make_unique<ProfDoc>();
    doc->category = finrel01_category();
    doc->monoid = hom_monoid(doc->category);
    put("prof_hom_finrel", prof_to_json(*doc));
  }
  {
    auto doc = std::make_unique<ProfDoc>();
    doc->category = cyclic_group_category(2);
    doc->monoid = hom_monoid(doc->category);
    put("prof_hom_z2", prof_to_json(*doc));
  }
  {
    auto doc = std::make_unique<ProfDoc>();
    doc->category = cyclic_group_category(3);
    doc->monoid = hom_monoid(doc->category);
    put("prof_hom_z3", prof_to_json(*doc));
  }
  {
    auto doc = std::make_unique<ProfDoc>();
    doc->category = cyclic_group_category(2);
    const std::vector<bool> all(4, true);
    doc->monoid = derive_mult(relation_pointed(doc->category, all));
    put("prof_full_z2", prof_to_json(*doc));
  }

  std::cout << written << " documents written to " << out_dir << '\n';
  return 0;
}
