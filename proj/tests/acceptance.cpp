// Acceptance gate: ten independently timed checks, one PASS/FAIL line
// each, exit 0 only if every line passes. Case counts and time budgets
// are pinned next to each check; exceeding a budget fails the check even
// when every case agrees. All equality is exact: canonical forms for
// diagrams, entry-wise equality for nat/bool matrices.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cobcat/algebra.hpp"
#include "cobcat/axioms.hpp"
#include "cobcat/cobordism.hpp"
#include "cobcat/error.hpp"
#include "cobcat/eval.hpp"
#include "cobcat/int_compact.hpp"
#include "cobcat/json_io.hpp"
#include "cobcat/kleisli.hpp"
#include "cobcat/matrix_instance.hpp"
#include "cobcat/prof.hpp"
#include "cobcat/random.hpp"
#include "cobcat/semiring.hpp"
#include "test_util.hpp"

using namespace cobcat;
using tutil::random_between_balanced;

namespace {

struct Outcome {
  bool passed = true;
  long cases = 0;
  std::string witness;

  void fail(std::string w) {
    if (passed) witness = std::move(w);
    passed = false;
  }
  void check(bool ok, const std::string& w) {
    ++cases;
    if (!ok) fail(w);
  }
};

std::string at_case(const char* what, int i) {
  return std::string(what) + " broke at case " + std::to_string(i);
}

// ---------------------------------------------------------------- 1 ----
// Category, unit, interchange and symmetry-naturality laws on random
// composable triples: at most 10 boundary points, 3 labels, fixed seed.
Outcome criterion_1() {
  Outcome o;
  const std::vector<Label> labels = {"a", "b", "c"};
  Rng r(101);
  for (int i = 0; i < 1000 && o.passed; ++i) {
    const Cobordism f = random_cobordism(r, labels, 10);
    const Cobordism g = random_cobordism_from(r, f.cod, labels);
    const Cobordism h = random_cobordism_from(r, g.cod, labels);
    o.check(compose(compose(f, g), h) == compose(f, compose(g, h)),
            at_case("associativity", i));
    o.check(compose(identity(f.dom), f) == f &&
                compose(f, identity(f.cod)) == f,
            at_case("unit", i));
    const Cobordism f2 = random_cobordism(r, labels, 6);
    const Cobordism g2 = random_cobordism_from(r, f2.cod, labels);
    o.check(compose(tensor(f, f2), tensor(g, g2)) ==
                tensor(compose(f, g), compose(f2, g2)),
            at_case("interchange", i));
    o.check(compose(tensor(f, f2), symmetry(f.cod, f2.cod)) ==
                compose(symmetry(f.dom, f2.dom), tensor(f2, f)),
            at_case("symmetry naturality", i));
  }
  return o;
}

// ---------------------------------------------------------------- 2 ----
// The seven feedback laws, 200 seeded cases per law: once over counting
// matrices (dimensions at most 3), once over boolean matrices, each run
// also checking the diagram side by canonical equality.
Outcome criterion_2() {
  Outcome o;
  const std::vector<Label> labels = {"a", "b"};
  const MatrixInstance<NatSemiring> nat({{"a", 2}, {"b", 3}});
  const MatrixInstance<BoolSemiring> rel({{"a", 2}, {"b", 2}});
  for (const TracedInstance* t :
       std::initializer_list<const TracedInstance*>{&nat, &rel}) {
    const LawCheckReport rep = check_traced_axioms(t, 200, 202, labels, 2,
                                                   /*check_cob=*/true);
    if (rep.entries.size() != 7) {
      o.fail("expected seven laws in the report");
      return o;
    }
    for (const LawCheckEntry& e : rep.entries) {
      o.cases += e.cases;
      if (!e.passed())
        o.fail(t->describe() + ": " + e.law + ": " + e.first_witness);
    }
  }
  return o;
}

// ---------------------------------------------------------------- 3 ----
// Splitting a diagram into shuffles, feedback, bent wires and loops and
// pushing a box filling through it must agree with two direct
// contractions: the delta-per-arc application and an application built
// from the diagram's own evaluated matrix.
std::vector<int> decode_digits(long long flat, const std::vector<int>& dims) {
  std::vector<int> d(dims.size());
  for (size_t i = dims.size(); i-- > 0;) {
    d[i] = static_cast<int>(flat % dims[i]);
    flat /= dims[i];
  }
  return d;
}

Matrix<NatSemiring> apply_via_eval_matrix(const Cobordism& phi,
                                          const Matrix<NatSemiring>& f,
                                          const std::map<Label, int>& dims) {
  using S = NatSemiring;
  const Matrix<S> big = matrix_eval_oracle<S>(phi, dims);
  // Per-boundary dimensions and the minus/plus position split.
  auto split = [&](const SignedSet& x, std::vector<int>& dall,
                   std::vector<int>& dminus, std::vector<int>& dplus,
                   std::vector<int>& which, std::vector<int>& at) {
    for (size_t i = 0; i < x.points.size(); ++i) {
      const int d = dims.at(x.points[i].label);
      dall.push_back(d);
      const bool minus = x.points[i].sign == Sign::minus;
      which.push_back(minus ? 0 : 1);
      if (minus) {
        at.push_back(static_cast<int>(dminus.size()));
        dminus.push_back(d);
      } else {
        at.push_back(static_cast<int>(dplus.size()));
        dplus.push_back(d);
      }
    }
  };
  std::vector<int> xd, xm, xp, xw, xa, yd, ym, yp, yw, ya;
  split(phi.dom, xd, xm, xp, xw, xa);
  split(phi.cod, yd, ym, yp, yw, ya);
  auto project = [](const std::vector<int>& digits,
                    const std::vector<int>& which, const std::vector<int>& at,
                    int side, size_t n) {
    std::vector<int> out(n, 0);
    for (size_t i = 0; i < digits.size(); ++i)
      if (which[i] == side) out[static_cast<size_t>(at[i])] = digits[i];
    return out;
  };
  Matrix<S> out(total_dim(yp), total_dim(ym));
  for (const auto& [key, v] : big.nz) {
    const std::vector<int> ydig = decode_digits(key.first, yd);
    const std::vector<int> xdig = decode_digits(key.second, xd);
    const auto fv = f.at(flat_index(xp, project(xdig, xw, xa, 1, xp.size())),
                         flat_index(xm, project(xdig, xw, xa, 0, xm.size())));
    out.add_to(flat_index(yp, project(ydig, yw, ya, 1, yp.size())),
               flat_index(ym, project(ydig, yw, ya, 0, ym.size())),
               S::mul(v, fv));
  }
  return out;
}

Outcome criterion_3() {
  Outcome o;
  const std::vector<Label> labels = {"a", "b", "c"};
  const std::map<Label, int> dims = {{"a", 2}, {"b", 3}, {"c", 2}};
  const MatrixInstance<NatSemiring> t(dims);
  Rng r(303);
  for (int i = 0; i < 500 && o.passed; ++i) {
    const Cobordism phi = random_cobordism(r, labels, 10);
    const Mor f = t.sample(r, inp(phi.dom), outp(phi.dom));
    const Mor via_split = action(t, phi, f);
    o.check(via_split.dom == inp(phi.cod) && via_split.cod == outp(phi.cod),
            at_case("boundary of the split pipeline", i));
    const Matrix<NatSemiring> via_deltas = oracle_apply(phi, t.mat(f), dims);
    o.check(matrix_equal(t.mat(via_split), via_deltas),
            at_case("split pipeline vs delta contraction", i));
    const Matrix<NatSemiring> via_eval =
        apply_via_eval_matrix(phi, t.mat(f), dims);
    o.check(matrix_equal(via_deltas, via_eval),
            at_case("delta contraction vs evaluated-matrix application", i));
  }
  return o;
}

// ---------------------------------------------------------------- 4 ----
// Viewing the matrix instance as box carriers and rebuilding an instance
// from those carriers reproduces identity, composition, juxtaposition,
// feedback and shuffles on sampled elements.
Outcome criterion_4() {
  Outcome o;
  const std::vector<Label> labels = {"a", "b"};
  const MatrixInstance<NatSemiring> t({{"a", 2}, {"b", 3}});
  const TracedAsAlgebra boxes(t);
  const AlgebraAsTraced t2(boxes);
  Rng r(404);
  for (int i = 0; i < 200 && o.passed; ++i) {
    const Word w = random_word(r, labels, 2), v = random_word(r, labels, 2);
    const Word u = random_word(r, labels, 2), z = random_word(r, labels, 2);
    o.check(t.equal(t2.identity_mor(w), t.identity_mor(w)),
            at_case("identity", i));
    const Mor f = t.sample(r, w, v), g = t.sample(r, v, u);
    o.check(t.equal(t2.compose(f, g), t.compose(f, g)),
            at_case("composition", i));
    const Mor h = t.sample(r, u, z);
    o.check(t.equal(t2.tensor_mor(f, h), t.tensor_mor(f, h)),
            at_case("juxtaposition", i));
    const Mor tr = t.sample(r, concat(u, w), concat(u, v));
    const int k = static_cast<int>(u.size());
    o.check(t.equal(t2.trace(k, tr), t.trace(k, tr)), at_case("feedback", i));
    const std::vector<int> perm = r.permutation(static_cast<int>(w.size()));
    o.check(t.equal(t2.permutation_mor(w, perm), t.permutation_mor(w, perm)),
            at_case("shuffle", i));
  }
  return o;
}

// ---------------------------------------------------------------- 5 ----
// The doubled category over boolean matrices: bent-pair triangles and
// identity laws exhaustively over all object shapes with words of length
// at most 2; associativity exhaustively over one-letter shapes plus
// random two-letter triples; composition against its closed-form oracle
// over counting matrices; embedding of the base instance is functorial.
std::vector<Word> words_up_to(const std::vector<Label>& labels, int max_len) {
  std::vector<Word> out = {{}};
  size_t lo = 0;
  for (int len = 1; len <= max_len; ++len) {
    const size_t hi = out.size();
    for (size_t i = lo; i < hi; ++i)
      for (const Label& l : labels) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    lo = hi;
  }
  return out;
}

IntMorphism rand_int(const TracedInstance& t, Rng& r, const IntObject& a,
                     const IntObject& b) {
  return make_int(t, a, b,
                  t.sample(r, concat(a.neg, b.pos), concat(a.pos, b.neg)));
}

Outcome criterion_5() {
  Outcome o;
  const MatrixInstance<BoolSemiring> rel({{"a", 2}, {"b", 2}});
  Rng r(505);

  std::vector<IntObject> objects2;  // two-letter alphabet, words <= 2
  for (const Word& n : words_up_to({"a", "b"}, 2))
    for (const Word& p : words_up_to({"a", "b"}, 2))
      objects2.push_back(IntObject{n, p});

  for (size_t i = 0; i < objects2.size() && o.passed; ++i) {
    const IntObject& a = objects2[i];
    const IntObject ad = int_dual(a);
    const IntMorphism id_a = int_identity(rel, a);
    const IntMorphism id_ad = int_identity(rel, ad);
    // a = a(x)I -> a(x)a*(x)a -> I(x)a = a.
    const IntMorphism zig1 = int_compose(
        rel, int_tensor(rel, id_a, int_eta(rel, a)),
        int_tensor(rel, int_eps(rel, a), id_a));
    o.check(int_equal(rel, zig1, id_a),
            "bent-pair triangle on object " + std::to_string(i));
    // a* = I(x)a* -> a*(x)a(x)a* -> a*(x)I = a*.
    const IntMorphism zig2 = int_compose(
        rel, int_tensor(rel, int_eta(rel, a), id_ad),
        int_tensor(rel, id_ad, int_eps(rel, a)));
    o.check(int_equal(rel, zig2, id_ad),
            "dual bent-pair triangle on object " + std::to_string(i));
  }

  for (size_t i = 0; i < objects2.size() && o.passed; ++i)
    for (size_t j = 0; j < objects2.size() && o.passed; ++j) {
      const IntMorphism f = rand_int(rel, r, objects2[i], objects2[j]);
      o.check(int_equal(rel,
                        int_compose(rel, int_identity(rel, objects2[i]), f),
                        f) &&
                  int_equal(rel,
                            int_compose(rel, f,
                                        int_identity(rel, objects2[j])),
                            f),
              "identity law at object pair (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
    }

  std::vector<IntObject> objects1;  // one-letter alphabet, words <= 2
  for (const Word& n : words_up_to({"a"}, 2))
    for (const Word& p : words_up_to({"a"}, 2))
      objects1.push_back(IntObject{n, p});
  auto assoc = [&](const IntObject& a, const IntObject& b, const IntObject& c,
                   const IntObject& d, const char* what) {
    const IntMorphism f = rand_int(rel, r, a, b);
    const IntMorphism g = rand_int(rel, r, b, c);
    const IntMorphism h = rand_int(rel, r, c, d);
    o.check(int_equal(rel, int_compose(rel, int_compose(rel, f, g), h),
                      int_compose(rel, f, int_compose(rel, g, h))),
            what);
  };
  for (size_t i = 0; i < objects1.size() && o.passed; ++i)
    for (size_t j = 0; j < objects1.size() && o.passed; ++j)
      for (size_t k = 0; k < objects1.size() && o.passed; ++k)
        assoc(objects1[i], objects1[j], objects1[k],
              objects1[static_cast<size_t>(r.below(
                  static_cast<int>(objects1.size())))],
              "associativity over one-letter shapes");
  for (int i = 0; i < 200 && o.passed; ++i) {
    auto pick = [&] {
      return objects2[static_cast<size_t>(
          r.below(static_cast<int>(objects2.size())))];
    };
    assoc(pick(), pick(), pick(), pick(),
          "associativity over two-letter shapes");
  }

  // Composition against the closed-form shuffle-and-feedback oracle.
  const MatrixInstance<NatSemiring> nat({{"a", 2}, {"b", 2}});
  for (int i = 0; i < 100 && o.passed; ++i) {
    auto obj = [&] {
      return IntObject{random_word(r, {"a", "b"}, 2),
                       random_word(r, {"a", "b"}, 2)};
    };
    const IntObject a = obj(), b = obj(), c = obj();
    const IntMorphism f = rand_int(nat, r, a, b);
    const IntMorphism g = rand_int(nat, r, b, c);
    o.check(int_equal(nat, int_compose(nat, f, g),
                      int_compose_formula(nat, f, g)),
            at_case("composition vs closed-form oracle", i));
  }

  // The embedding of plain instance morphisms preserves identity and
  // composition.
  for (int i = 0; i < 100 && o.passed; ++i) {
    const Word w = random_word(r, {"a", "b"}, 2);
    const Word v = random_word(r, {"a", "b"}, 2);
    const Word u = random_word(r, {"a", "b"}, 2);
    const Mor f = nat.sample(r, w, v), g = nat.sample(r, v, u);
    o.check(int_equal(nat, unit_embed(nat, nat.identity_mor(w)),
                      int_identity(nat, IntObject{w, {}})),
            at_case("embedding of the identity", i));
    o.check(int_equal(nat, unit_embed(nat, nat.compose(f, g)),
                      int_compose(nat, unit_embed(nat, f),
                                  unit_embed(nat, g))),
            at_case("embedding of a composite", i));
  }
  return o;
}

// ---------------------------------------------------------------- 6 ----
// The feedback every bent pair induces on diagrams equals the built-in
// feedback, canonically, on random balanced boundaries.
Outcome criterion_6() {
  Outcome o;
  const std::vector<Label> labels = {"a", "b", "c"};
  const CobOps ops;
  Rng r(606);
  for (int i = 0; i < 500 && o.passed; ++i) {
    const SignedSet u = random_signed_set(r, labels, 3);
    const SignedSet x = random_signed_set(r, labels, 4);
    const SignedSet y = random_signed_set(r, labels, 3);
    const Cobordism f = random_between_balanced(r, concat(u, x), concat(u, y));
    const SignedSet y2{std::vector<SignedPoint>(
        f.cod.points.begin() + static_cast<long>(u.points.size()),
        f.cod.points.end())};
    o.check(compact_trace(ops, u, x, y2, f) ==
                trace_cob(f, static_cast<int>(u.points.size())),
            at_case("bent-pair feedback", i));
  }
  return o;
}

// ---------------------------------------------------------------- 7 ----
// Finite module suite over the three table categories: the bent-cell
// bijection round-trips elementwise, the derived product passes the whole
// monoid law suite and recovers the forgotten one, and the carrier
// spread/restrict pair is an elementwise bijection.
FiniteCopresheaf unit_column_carrier(const FiniteCategory& c) {
  FiniteCopresheaf m;
  m.base = &c;
  m.sets.assign(c.n_obj(), {});
  std::vector<int> new_id(static_cast<size_t>(c.n_mor()), -1);
  for (int a = 0; a < c.n_obj(); ++a)
    for (const MorId f : c.hom[static_cast<size_t>(c.unit_obj)]
                              [static_cast<size_t>(a)]) {
      new_id[static_cast<size_t>(f)] = m.n_elem();
      m.sets[static_cast<size_t>(a)].push_back(new_id[static_cast<size_t>(f)]);
      m.elem_at.push_back(a);
      m.elem_name.push_back(c.mor_name[static_cast<size_t>(f)]);
    }
  const int ne = m.n_elem();
  std::vector<MorId> orig(static_cast<size_t>(ne), -1);
  for (int f = 0; f < c.n_mor(); ++f)
    if (new_id[static_cast<size_t>(f)] >= 0)
      orig[static_cast<size_t>(new_id[static_cast<size_t>(f)])] = f;
  m.action.assign(static_cast<size_t>(c.n_mor()),
                  std::vector<ElemId>(static_cast<size_t>(ne), -1));
  for (int f = 0; f < c.n_mor(); ++f)
    for (int e = 0; e < ne; ++e)
      if (c.mor_dom[static_cast<size_t>(f)] == m.elem_at[static_cast<size_t>(e)])
        m.action[static_cast<size_t>(f)][static_cast<size_t>(e)] =
            new_id[static_cast<size_t>(
                c.comp[static_cast<size_t>(f)]
                      [static_cast<size_t>(orig[static_cast<size_t>(e)])])];
  m.mu.assign(static_cast<size_t>(ne),
              std::vector<ElemId>(static_cast<size_t>(ne), -1));
  for (int e1 = 0; e1 < ne; ++e1)
    for (int e2 = 0; e2 < ne; ++e2)
      m.mu[static_cast<size_t>(e1)][static_cast<size_t>(e2)] =
          new_id[static_cast<size_t>(
              c.tensor_mor[static_cast<size_t>(orig[static_cast<size_t>(e1)])]
                          [static_cast<size_t>(orig[static_cast<size_t>(e2)])])];
  m.unit_elem =
      new_id[static_cast<size_t>(c.identities[static_cast<size_t>(c.unit_obj)])];
  return m;
}

FiniteCopresheaf one_point_carrier(const FiniteCategory& c) {
  FiniteCopresheaf m;
  m.base = &c;
  m.sets.assign(static_cast<size_t>(c.n_obj()), {});
  for (int a = 0; a < c.n_obj(); ++a) {
    m.sets[static_cast<size_t>(a)].push_back(a);
    m.elem_at.push_back(a);
    m.elem_name.push_back("pt_" + c.objects[static_cast<size_t>(a)]);
  }
  m.action.assign(static_cast<size_t>(c.n_mor()),
                  std::vector<ElemId>(static_cast<size_t>(c.n_obj()), -1));
  for (int f = 0; f < c.n_mor(); ++f)
    m.action[static_cast<size_t>(f)][static_cast<size_t>(
        c.mor_dom[static_cast<size_t>(f)])] = c.mor_cod[static_cast<size_t>(f)];
  m.mu.assign(static_cast<size_t>(c.n_obj()),
              std::vector<ElemId>(static_cast<size_t>(c.n_obj()), -1));
  for (int a = 0; a < c.n_obj(); ++a)
    for (int b = 0; b < c.n_obj(); ++b)
      m.mu[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          c.tensor_obj[static_cast<size_t>(a)][static_cast<size_t>(b)];
  m.unit_elem = c.unit_obj;
  return m;
}

Outcome criterion_7() {
  Outcome o;
  const std::vector<FiniteCategory> bases = {
      cyclic_group_category(2), cyclic_group_category(3), finrel01_category()};
  for (const FiniteCategory& c : bases) {
    if (!o.passed) break;
    const ProfMonoid hom = hom_monoid(c);
    const PointedEndo p = forget_mult(hom);

    // Bent-cell bijection: inverse-of-forward on every element, then
    // forward-of-inverse on every unit-column element for every shape
    // pair that lands in its cell.
    for (int m = 0; m < p.m.n_elem(); ++m) {
      const ObjId a = p.m.elem_src[static_cast<size_t>(m)];
      const ObjId b = p.m.elem_dst[static_cast<size_t>(m)];
      o.check(hom_shift_inverse(p, a, b, hom_shift_forward(p, m)) == m,
              c.name + ": bend-then-unbend moved element " +
                  std::to_string(m));
    }
    for (int a = 0; a < c.n_obj(); ++a)
      for (int b = 0; b < c.n_obj(); ++b) {
        const ObjId cell = c.tensor_obj[static_cast<size_t>(
            c.dual_obj[static_cast<size_t>(a)])][static_cast<size_t>(b)];
        for (const ElemId m2 :
             p.m.cells[static_cast<size_t>(c.unit_obj)][static_cast<size_t>(
                 cell)])
          o.check(hom_shift_forward(p, hom_shift_inverse(p, a, b, m2)) == m2,
                  c.name + ": unbend-then-bend moved element " +
                      std::to_string(m2));
      }

    // The derived product passes the full law suite and recovers the
    // forgotten multiplication.
    const ProfMonoid derived = derive_mult(p);
    try {
      validate_prof_monoid(derived);
      ++o.cases;
    } catch (const Error& e) {
      o.fail(c.name + ": derived product failed the law suite: " + e.what());
    }
    o.check(derived.mult == hom.mult,
            c.name + ": deriving after forgetting changed the product");

    // Carrier round trip: spread to a module, restrict back, compare
    // elementwise through the origin maps.
    const std::vector<FiniteCopresheaf> carriers =
        c.name == "finrel01"
            ? std::vector<FiniteCopresheaf>{unit_column_carrier(c),
                                            one_point_carrier(c)}
            : std::vector<FiniteCopresheaf>{one_point_carrier(c)};
    for (const FiniteCopresheaf& mc : carriers) {
      const SpreadResult sp = copresheaf_to_monoid(mc);
      try {
        validate_prof_monoid(sp.monoid);
        ++o.cases;
      } catch (const Error& e) {
        o.fail(c.name + ": spread module failed the law suite: " + e.what());
        break;
      }
      const RestrictResult re = monoid_to_copresheaf(sp.pointed);
      auto back = [&](ElemId u) {
        return sp.origin_elem[static_cast<size_t>(
            re.origin_elem[static_cast<size_t>(u)])];
      };
      bool ok = re.copresheaf.n_elem() == mc.n_elem();
      for (int a = 0; ok && a < c.n_obj(); ++a) {
        const auto& ra = re.copresheaf.sets[static_cast<size_t>(a)];
        const auto& ma = mc.sets[static_cast<size_t>(a)];
        ok = ra.size() == ma.size();
        for (size_t i = 0; ok && i < ma.size(); ++i)
          ok = back(ra[i]) == ma[i];
      }
      for (int f = 0; ok && f < c.n_mor(); ++f)
        for (int u = 0; ok && u < re.copresheaf.n_elem(); ++u) {
          const ElemId v =
              re.copresheaf.action[static_cast<size_t>(f)][static_cast<size_t>(u)];
          if (v < 0) continue;
          ok = back(v) == mc.action[static_cast<size_t>(f)]
                                   [static_cast<size_t>(back(u))];
        }
      for (int u1 = 0; ok && u1 < re.copresheaf.n_elem(); ++u1)
        for (int u2 = 0; ok && u2 < re.copresheaf.n_elem(); ++u2)
          ok = back(re.copresheaf.mu[static_cast<size_t>(u1)]
                                    [static_cast<size_t>(u2)]) ==
               mc.mu[static_cast<size_t>(back(u1))]
                    [static_cast<size_t>(back(u2))];
      ok = ok && back(re.copresheaf.unit_elem) == mc.unit_elem;
      o.check(ok, c.name + ": spread-then-restrict is not the identity");
    }

    // The unit-column carrier of finrel spreads onto the hom module: the
    // unit map is a cellwise bijection respecting the product.
    if (c.name == "finrel01") {
      const SpreadResult sp = copresheaf_to_monoid(unit_column_carrier(c));
      bool ok = true;
      for (int a = 0; ok && a < c.n_obj(); ++a)
        for (int b = 0; ok && b < c.n_obj(); ++b)
          ok = sp.pointed.m.cells[static_cast<size_t>(a)][static_cast<size_t>(b)]
                   .size() == c.hom[static_cast<size_t>(a)][static_cast<size_t>(b)]
                   .size();
      for (int f = 0; ok && f < c.n_mor(); ++f)
        for (int g = 0; ok && g < c.n_mor(); ++g) {
          if (f != g) ok = sp.pointed.unit[static_cast<size_t>(f)] !=
                           sp.pointed.unit[static_cast<size_t>(g)];
          if (!ok || c.mor_dom[static_cast<size_t>(g)] !=
                         c.mor_cod[static_cast<size_t>(f)])
            continue;
          ok = sp.monoid.mult[static_cast<size_t>(
                   sp.pointed.unit[static_cast<size_t>(g)])]
                   [static_cast<size_t>(sp.pointed.unit[static_cast<size_t>(f)])] ==
               sp.pointed.unit[static_cast<size_t>(
                   c.comp[static_cast<size_t>(g)][static_cast<size_t>(f)])];
        }
      o.check(ok, "the spread unit-column carrier is not the hom module");
    }
  }
  return o;
}

// ---------------------------------------------------------------- 8 ----
// Every diagonal-containing tensor-closed relation over the two-element
// group collapses to a lawful category with an identity-on-objects
// embedding; and the checkers catch deliberately corrupted data with a
// named law in the report.
struct BrokenTraceInstance final : TracedInstance {
  MatrixInstance<NatSemiring> inner;
  explicit BrokenTraceInstance(std::map<Label, int> d) : inner(std::move(d)) {}

  std::string describe() const override {
    return "matrix instance whose feedback forgets to sum the closed index";
  }
  Mor identity_mor(const Word& w) const override {
    return inner.identity_mor(w);
  }
  Mor compose(const Mor& f, const Mor& g) const override {
    return inner.compose(f, g);
  }
  Mor tensor_mor(const Mor& f, const Mor& g) const override {
    return inner.tensor_mor(f, g);
  }
  Mor permutation_mor(const Word& w,
                      const std::vector<int>& tgt) const override {
    return inner.permutation_mor(w, tgt);
  }
  bool equal(const Mor& f, const Mor& g) const override {
    return inner.equal(f, g);
  }
  Mor sample(Rng& r, const Word& dom, const Word& cod) const override {
    return inner.sample(r, dom, cod);
  }
  Mor trace(int k, const Mor& f) const override {
    const Mor good = inner.trace(k, f);  // validates the boundaries
    long long dY = 1, dX = 1;
    for (const Label& l : good.cod) dY *= inner.dims().at(l);
    for (const Label& l : good.dom) dX *= inner.dims().at(l);
    // Keep only the first diagonal block of the closed index.
    Matrix<NatSemiring> out(dY, dX);
    for (const auto& [key, v] : inner.mat(f).nz)
      if (key.first < dY && key.second < dX) out.set(key.first, key.second, v);
    return inner.make_mor(std::move(out), good.dom, good.cod);
  }
};

Outcome criterion_8() {
  Outcome o;
  const FiniteCategory z2 = cyclic_group_category(2);
  const std::vector<std::vector<bool>> masks =
      reflexive_multiplicative_relations(z2);
  o.check(masks.size() == 2, "expected exactly the diagonal and the full "
                             "relation over the two-element group");
  std::vector<ProfMonoid> monoids;
  for (const auto& mask : masks)
    monoids.push_back(derive_mult(relation_pointed(z2, mask)));
  monoids.push_back(hom_monoid(z2));
  for (size_t i = 0; i < monoids.size() && o.passed; ++i) {
    const ProfMonoid& n = monoids[i];
    try {
      const Collapsed col = collapse(n);
      validate_category(col.category);
      ++o.cases;
      o.check(col.category.objects == z2.objects,
              "collapse changed the objects");
      bool functorial = true;
      for (int g = 0; functorial && g < z2.n_mor(); ++g)
        for (int f = 0; functorial && f < z2.n_mor(); ++f) {
          if (z2.mor_dom[static_cast<size_t>(g)] !=
              z2.mor_cod[static_cast<size_t>(f)])
            continue;
          functorial =
              col.category.comp[static_cast<size_t>(
                  col.embed[static_cast<size_t>(g)])]
                  [static_cast<size_t>(col.embed[static_cast<size_t>(f)])] ==
              col.embed[static_cast<size_t>(
                  z2.comp[static_cast<size_t>(g)][static_cast<size_t>(f)])];
        }
      for (int a = 0; a < z2.n_obj(); ++a)
        functorial = functorial &&
                     col.category.identities[static_cast<size_t>(a)] ==
                         col.embed[static_cast<size_t>(
                             z2.identities[static_cast<size_t>(a)])];
      o.check(functorial, "the embedding is not identity-on-objects "
                          "functorial at module " + std::to_string(i));
    } catch (const Error& e) {
      o.fail("collapse of module " + std::to_string(i) +
             " is not lawful: " + e.what());
    }
  }

  // Corrupted product: one multiplication entry rewired must be rejected
  // with a law named in the message.
  {
    const FiniteCategory fr = finrel01_category();
    ProfMonoid bad = hom_monoid(fr);
    bad.mult[4][4] = 3;
    bool caught = false;
    std::string msg;
    try {
      collapse(bad);
    } catch (const Error& e) {
      caught = e.code() == Errc::law_violation;
      msg = e.what();
    }
    o.check(caught && msg.find("absorption") != std::string::npos,
            "the corrupted product was not rejected with a named law");
  }

  // Corrupted feedback: an instance that forgets to sum the closed index
  // must fail the law report with named laws.
  {
    const BrokenTraceInstance mutant({{"a", 2}, {"b", 2}});
    const LawCheckReport rep =
        check_traced_axioms(&mutant, 40, 808, {"a", "b"}, 2,
                            /*check_cob=*/false);
    bool named_fail = false;
    for (const LawCheckEntry& e : rep.entries)
      if (!e.passed() && !e.law.empty() && !e.first_witness.empty())
        named_fail = true;
    o.check(!rep.all_passed() && named_fail &&
                rep.summary().find("FAIL") != std::string::npos,
            "the corrupted feedback went undetected");
  }
  return o;
}

// ---------------------------------------------------------------- 9 ----
// Relabeling along random word maps (target words of length at most 2,
// random involution marks) is functorial: it preserves identities and
// commutes with composition, and expanding along a composite map equals
// expanding twice.
KleisliMap random_kmap(Rng& r, const std::vector<Label>& src,
                       const std::vector<Label>& tgt) {
  std::map<Label, KWord> assignment;
  for (const Label& s : src) {
    KWord w;
    const int len = r.below(3);
    for (int i = 0; i < len; ++i)
      w.push_back(KLetter{tgt[static_cast<size_t>(
                              r.below(static_cast<int>(tgt.size())))],
                          r.coin()});
    assignment[s] = std::move(w);
  }
  return make_kleisli(make_label_set(src), make_label_set(tgt),
                      std::move(assignment));
}

Outcome criterion_9() {
  Outcome o;
  const std::vector<Label> l1 = {"a", "b"};
  const std::vector<Label> l2 = {"x", "y"};
  const std::vector<Label> l3 = {"p", "q"};
  Rng r(909);
  for (int i = 0; i < 300 && o.passed; ++i) {
    const Cobordism f = random_cobordism(r, l1, 8);
    const Cobordism g = random_cobordism_from(r, f.cod, l1);
    const KleisliMap k = random_kmap(r, l1, l2);
    const KleisliMap k2 = random_kmap(r, l2, l3);
    o.check(relabel(compose(f, g), k) == compose(relabel(f, k), relabel(g, k)),
            at_case("expansion of a composite", i));
    o.check(relabel(identity(f.dom), k) == identity(relabel(f.dom, k)),
            at_case("expansion of an identity", i));
    o.check(relabel(f, kleisli_compose(k, k2)) ==
                relabel(relabel(f, k), k2),
            at_case("expansion along a composite map", i));
  }
  return o;
}

// --------------------------------------------------------------- 10 ----
// The command line tool reproduces every golden document byte for byte,
// twice, and re-normalizing its own output changes nothing.
namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunOut {
  int code = -1;
  std::string out;
};

RunOut run_cli(const std::string& args, const std::string& input) {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() /
                 ("cobcat_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  const fs::path in = dir / "in.json", out = dir / "out.json";
  {
    std::ofstream o1(in, std::ios::binary);
    o1 << input;
  }
  const std::string cmd = std::string(CLI_PATH) + " " + args + " < " +
                          in.string() + " > " + out.string() +
                          " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  RunOut r;
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  r.out = slurp(out);
  return r;
}

Outcome criterion_10() {
  Outcome o;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(GOLDEN_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  o.check(files.size() == 20, "expected a corpus of 20 documents, found " +
                                  std::to_string(files.size()));
  for (const fs::path& f : files) {
    if (!o.passed) break;
    const std::string expect = slurp(f);
    const RunOut first = run_cli("normalize " + f.string(), "");
    o.check(first.code == 0 && first.out == expect,
            f.filename().string() + ": normalize is not the identity");
    const RunOut second = run_cli("normalize " + f.string(), "");
    o.check(second.out == first.out,
            f.filename().string() + ": two identical runs disagreed");
    const RunOut reparsed = run_cli("normalize -", first.out);
    o.check(reparsed.code == 0 && reparsed.out == expect,
            f.filename().string() + ": parse-serialize-parse moved the bytes");
  }
  return o;
}

struct CriterionSpec {
  const char* title;
  double budget_s;  // 0 means no pinned budget
  Outcome (*run)();
};

const CriterionSpec kCriteria[] = {
    {"category and symmetry laws on random composable triples", 10,
     criterion_1},
    {"the seven feedback laws in diagrams, counting and boolean matrices", 30,
     criterion_2},
    {"split-and-close application agrees with direct contraction", 30,
     criterion_3},
    {"the instance rebuilt from its box carriers repeats every operation", 0,
     criterion_4},
    {"doubled category: triangles, laws, composition oracle, embedding", 0,
     criterion_5},
    {"bent-pair feedback on diagrams equals built-in feedback", 0,
     criterion_6},
    {"finite module suite: bends, derived products, carrier round trips", 10,
     criterion_7},
    {"small relation modules collapse lawfully; corrupted data is named", 0,
     criterion_8},
    {"relabeling along random word maps preserves composition", 0,
     criterion_9},
    {"the command line tool reproduces the golden corpus byte for byte", 0,
     criterion_10},
};

}  // namespace

int main() {
  bool all = true;
  for (size_t i = 0; i < std::size(kCriteria); ++i) {
    const CriterionSpec& c = kCriteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("unexpected error: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (c.budget_s > 0 && secs >= c.budget_s)
      o.fail("exceeded the " + std::to_string(static_cast<int>(c.budget_s)) +
             " s budget");
    char line[512];
    if (o.passed) {
      std::snprintf(line, sizeof line, "PASS %2zu. %s  [%ld checks, %.1f s]",
                    i + 1, c.title, o.cases, secs);
    } else {
      std::snprintf(line, sizeof line,
                    "FAIL %2zu. %s  [%ld checks, %.1f s] -- %s", i + 1,
                    c.title, o.cases, secs, o.witness.c_str());
      all = false;
    }
    std::cout << line << '\n';
  }
  return all ? 0 : 1;
}
