#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobcat/algebra.hpp"
#include "cobcat/axioms.hpp"
#include "cobcat/cobordism.hpp"
#include "cobcat/error.hpp"
#include "cobcat/eval.hpp"
#include "cobcat/matrix_instance.hpp"
#include "cobcat/random.hpp"
#include "mutants.hpp"
#include "test_util.hpp"

using namespace cobcat;
using namespace tutil;

static const std::vector<Label> kLabels = {"a", "b", "c"};
static const std::map<Label, int> kDims = {{"a", 2}, {"b", 3}, {"c", 1}};

template <typename S>
static Matrix<S> mk_mat(long long rows, long long cols,
                        const std::vector<long>& vals) {
  REQUIRE(static_cast<long long>(vals.size()) == rows * cols);
  std::vector<typename S::value_type> conv;
  conv.reserve(vals.size());
  for (long v : vals) conv.push_back(S::from_int(v));
  return from_dense<S>(rows, cols, conv);
}

using NatInst = MatrixInstance<NatSemiring>;
using BoolInst = MatrixInstance<BoolSemiring>;

TEST_CASE("matrix instance composes by matrix product") {
  NatInst t(kDims);
  // f: [a] -> [a], g: [a] -> [a]; compose(f,g) = g·f.
  Mor f = t.make_mor(mk_mat<NatSemiring>(2, 2, {1, 2, 3, 4}), wd("a"),
                     wd("a"));
  Mor g = t.make_mor(mk_mat<NatSemiring>(2, 2, {0, 1, 1, 0}), wd("a"),
                     wd("a"));
  Mor h = t.compose(f, g);
  CHECK(matrix_equal(t.mat(h), mk_mat<NatSemiring>(2, 2, {3, 4, 1, 2})));
  CHECK(t.equal(t.compose(f, t.identity_mor(wd("a"))), f));
  CHECK(t.equal(t.compose(t.identity_mor(wd("a")), f), f));
  CHECK(t.dim_of(wd("a b")) == 6);
  CHECK_ERRC(t.dim_of(wd("z")), Errc::unknown_label);
}

TEST_CASE("matrix feedback sums diagonal blocks") {
  NatInst t(kDims);
  Mor f = t.make_mor(
      mk_mat<NatSemiring>(4, 4, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13,
                                 14, 15, 16}),
      wd("a a"), wd("a a"));
  Mor g = t.trace(1, f);
  // Sum of the (0,0) and (1,1) 2x2 blocks.
  CHECK(matrix_equal(t.mat(g),
                     mk_mat<NatSemiring>(2, 2, {1 + 11, 2 + 12, 5 + 15,
                                                6 + 16})));
  CHECK_ERRC(t.trace(1, t.make_mor(mk_mat<NatSemiring>(3, 2, {0, 0, 0, 0, 0,
                                                              0}),
                                   wd("a"), wd("b"))),
             Errc::prefix_mismatch);
}

TEST_CASE("the crossing matrix is the swap and yanks back straight") {
  NatInst t(kDims);
  Mor s = t.symmetry_mor(wd("a"), wd("a"));
  CHECK(matrix_equal(t.mat(s),
                     mk_mat<NatSemiring>(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1,
                                                0, 0, 0, 0, 0, 1})));
  CHECK(t.equal(t.trace(1, s), t.identity_mor(wd("a"))));
  CHECK(t.equal(t.compose(s, s), t.identity_mor(wd("a a"))));
}

TEST_CASE("direct contraction of single wires, bent wires and loops") {
  Matrix<NatSemiring> id2 =
      matrix_eval_oracle<NatSemiring>(identity(ss("a+")), kDims);
  CHECK(matrix_equal(id2, identity_matrix<NatSemiring>(2)));

  Matrix<NatSemiring> bent =
      matrix_eval_oracle<NatSemiring>(cup(ss("a+")), kDims);
  CHECK(matrix_equal(bent, mk_mat<NatSemiring>(4, 1, {1, 0, 0, 1})));

  std::map<Label, int> d5 = {{"a", 5}};
  Matrix<NatSemiring> loops = matrix_eval_oracle<NatSemiring>(
      make_cobordism({}, {}, {}, {{"a", 1}}), d5);
  CHECK(matrix_equal(loops, mk_mat<NatSemiring>(1, 1, {5})));
}

TEST_CASE("bent wire matrices satisfy the straightening identities") {
  NatInst t(kDims);
  CHECK(matrix_equal(t.mat(t.eta(wd("a"))), mk_mat<NatSemiring>(4, 1, {1, 0, 0,
                                                                       1})));
  for (const Word& w : {wd("a"), wd("a b"), wd("b a"), Word{}}) {
    Word wr = t.dual_word(w);
    Mor lhs = t.compose(t.tensor_mor(t.identity_mor(w), t.eta(w)),
                        t.tensor_mor(t.eps(w), t.identity_mor(w)));
    CHECK(t.equal(lhs, t.identity_mor(w)));
    Mor rhs = t.compose(t.tensor_mor(t.eta(w), t.identity_mor(wr)),
                        t.tensor_mor(t.identity_mor(wr), t.eps(w)));
    CHECK(t.equal(rhs, t.identity_mor(wr)));
  }
}

TEST_CASE("acting with an identity cobordism changes nothing") {
  NatInst t(kDims);
  Rng r(31);
  for (int i = 0; i < 50; ++i) {
    SignedSet x = random_signed_set(r, kLabels, 6);
    Mor f = t.sample(r, inp(x), outp(x));
    CHECK(t.equal(action(t, identity(x), f), f));
  }
}

TEST_CASE("closing the first strand of a crossing gives the identity matrix") {
  std::map<Label, int> d2 = {{"a", 2}};
  NatInst t(d2);
  // Box with two inputs and two outputs; the first input is fed back into
  // the first output, the rest passes straight out.
  Cobordism phi = make_cobordism(ss("a- a- a+ a+"), ss("a- a+"),
                                 {DD(1, 3), DC(2, 1), DC(4, 2)});
  Mor swap = t.symmetry_mor(wd("a"), wd("a"));
  Mor out = action(t, phi, swap);
  CHECK(t.equal(out, t.identity_mor(wd("a"))));
  CHECK(matrix_equal(oracle_apply(phi, t.mat(swap), d2),
                     identity_matrix<NatSemiring>(2)));
}

TEST_CASE("acting with a floating loop multiplies by its dimension") {
  std::map<Label, int> d3 = {{"a", 3}};
  NatInst t(d3);
  Cobordism phi = make_cobordism({}, {}, {}, {{"a", 1}});
  Mor unit = t.identity_mor({});
  CHECK(matrix_equal(t.mat(action(t, phi, unit)),
                     mk_mat<NatSemiring>(1, 1, {3})));
  // Loop counts multiply the scalar in: k loops give 3^k.
  long expect = 1;
  for (int k = 0; k <= 4; ++k) {
    Cobordism more = make_cobordism({}, {}, {}, {{"a", k}});
    CHECK(matrix_equal(t.mat(action(t, more, unit)),
                       mk_mat<NatSemiring>(1, 1, {expect})));
    expect *= 3;
  }
}

TEST_CASE("action rejects fillings with the wrong boundary") {
  NatInst t(kDims);
  Mor wrong = t.identity_mor(wd("a"));
  CHECK_ERRC(action(t, identity(ss("b+")), wrong), Errc::type_mismatch);
}

TEST_CASE("the split pipeline matches the direct contraction") {
  NatInst t(kDims);
  Rng r(32);
  for (int i = 0; i < 300; ++i) {
    Cobordism phi = random_cobordism(r, kLabels, 10);
    Mor f = t.sample(r, inp(phi.dom), outp(phi.dom));
    Mor via_pipeline = action(t, phi, f);
    Matrix<NatSemiring> via_oracle = oracle_apply(phi, t.mat(f), kDims);
    REQUIRE(matrix_equal(t.mat(via_pipeline), via_oracle));
  }
}

TEST_CASE("acting is functorial along composition") {
  NatInst t(kDims);
  Rng r(33);
  for (int i = 0; i < 150; ++i) {
    Cobordism phi = random_cobordism(r, kLabels, 8);
    Cobordism psi = random_cobordism_from(r, phi.cod, kLabels);
    Mor f = t.sample(r, inp(phi.dom), outp(phi.dom));
    REQUIRE(t.equal(action(t, compose(phi, psi), f),
                    action(t, psi, action(t, phi, f))));
  }
}

TEST_CASE("boxed carriers have the transposed-boundary matrix shape") {
  NatInst t(kDims);
  TracedAsAlgebra p(t);
  Rng r(34);
  Elem e = p.sample(r, ss("a- b+"));
  Mor em = p.to_mor(e);
  const auto& m = t.mat(em);
  CHECK(m.rows == 3);  // one plus point of dimension 3
  CHECK(m.cols == 2);  // one minus point of dimension 2
  CHECK(t.equal(p.to_mor(p.unit()), t.identity_mor({})));
}

TEST_CASE("rebuilding the instance from its boxes preserves every operation") {
  NatInst t(kDims);
  TracedAsAlgebra p(t);
  AlgebraAsTraced t2(p);
  Rng r(35);
  for (int i = 0; i < 60; ++i) {
    Word w = random_word(r, kLabels, 2), v = random_word(r, kLabels, 2);
    Word u = random_word(r, kLabels, 2), z = random_word(r, kLabels, 2);
    REQUIRE(t.equal(t2.identity_mor(w), t.identity_mor(w)));
    Mor f = t.sample(r, w, v), g = t.sample(r, v, u);
    REQUIRE(t.equal(t2.compose(f, g), t.compose(f, g)));
    Mor h = t.sample(r, u, z);
    REQUIRE(t.equal(t2.tensor_mor(f, h), t.tensor_mor(f, h)));
    Mor tr_arg = t.sample(r, concat(u, w), concat(u, v));
    REQUIRE(t.equal(t2.trace(static_cast<int>(u.size()), tr_arg),
                    t.trace(static_cast<int>(u.size()), tr_arg)));
    std::vector<int> perm = r.permutation(static_cast<int>(w.size()));
    REQUIRE(t.equal(t2.permutation_mor(w, perm), t.permutation_mor(w, perm)));
  }
}

TEST_CASE("boxing the rebuilt instance acts like the original boxes") {
  NatInst t(kDims);
  TracedAsAlgebra p(t);
  AlgebraAsTraced t2(p);
  TracedAsAlgebra p2(t2);
  Rng r(36);
  for (int i = 0; i < 60; ++i) {
    Cobordism phi = random_cobordism(r, kLabels, 8);
    Elem e = p.sample(r, phi.dom);
    Elem via_p = p.act(phi, e);
    Elem via_p2 = p2.act(phi, Elem{e.payload, e.shape});
    REQUIRE(p.equal(via_p, via_p2));
    REQUIRE(p.equal(p.mult(e, e), p2.mult(e, e)));
  }
}

TEST_CASE("all seven feedback laws hold in diagrams and in matrices") {
  NatInst nat(kDims);
  BoolInst rel(kDims);
  for (const TracedInstance* t :
       std::initializer_list<const TracedInstance*>{&nat, &rel}) {
    LawCheckReport rep = check_traced_axioms(t, 40, 97, kLabels, 2, true);
    INFO(t->describe(), "\n", rep.summary());
    CHECK(rep.all_passed());
    CHECK(rep.entries.size() == 7);
  }
}

TEST_CASE("laws hold for float matrices on small integer samples") {
  MatrixInstance<F64Semiring> t(kDims);
  LawCheckReport rep = check_traced_axioms(&t, 15, 98, kLabels, 2, false);
  INFO(rep.summary());
  CHECK(rep.all_passed());
}

TEST_CASE("a spurious feedback loop is caught and the broken law is named") {
  NatInst base(kDims);
  Mor two = base.trace(1, base.identity_mor(wd("a")));  // scalar value 2
  mutants::SpuriousLoopTrace bad(base, two);
  LawCheckReport rep = check_traced_axioms(&bad, 60, 99, kLabels, 2, false);
  CHECK(!rep.all_passed());
  bool superposition_ok = false, vanishing_tensor_bad = false;
  for (const auto& e : rep.entries) {
    if (e.law == "superposition") superposition_ok = e.passed();
    if (e.law == "vanishing tensor") {
      vanishing_tensor_bad = !e.passed();
      CHECK(!e.first_witness.empty());
    }
  }
  CHECK(superposition_ok);
  CHECK(vanishing_tensor_bad);
  INFO(rep.summary());
  CHECK(rep.summary().find("FAIL vanishing tensor") != std::string::npos);
}

TEST_CASE("float arithmetic rejects results outside the finite range") {
  CHECK_ERRC(F64Semiring::mul(1e300, 1e300), Errc::overflow);
  CHECK(F64Semiring::eq(1.0, 1.0 + 1e-12));
  CHECK(!F64Semiring::eq(1.0, 1.001));
}
