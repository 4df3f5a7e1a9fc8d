#include "cobcat/prof.hpp"

#include <string>
#include <vector>

namespace cobcat {

namespace {

void shape(bool ok, const std::string& what) {
  if (!ok) fail(Errc::type_mismatch, "malformed tables: " + what);
}

void law(bool ok, const std::string& name, const std::string& witness) {
  if (!ok) fail(Errc::law_violation, name + ": " + witness);
}

// Checked lookup for tables that must be total on the queried entries.
ElemId need(const std::vector<std::vector<ElemId>>& t, int i, int j,
            const char* what) {
  const ElemId r = t[i][j];
  if (r < 0) fail(Errc::internal, std::string("undefined ") + what + " lookup");
  return r;
}

}  // namespace

void validate_category(const FiniteCategory& c) {
  const int no = c.n_obj();
  const int nm = c.n_mor();
  shape(no > 0, "a category needs at least one object");
  shape(static_cast<int>(c.mor_cod.size()) == nm &&
            static_cast<int>(c.mor_name.size()) == nm,
        "morphism arrays disagree in length");
  shape(static_cast<int>(c.identities.size()) == no,
        "one identity per object required");
  shape(static_cast<int>(c.hom.size()) == no, "hom table needs a row per object");
  for (int a = 0; a < no; ++a)
    shape(static_cast<int>(c.hom[a].size()) == no,
          "hom table needs a column per object");
  shape(static_cast<int>(c.comp.size()) == nm,
        "composition table needs a row per morphism");
  for (int g = 0; g < nm; ++g)
    shape(static_cast<int>(c.comp[g].size()) == nm,
          "composition table needs a column per morphism");

  for (int m = 0; m < nm; ++m)
    shape(c.mor_dom[m] >= 0 && c.mor_dom[m] < no && c.mor_cod[m] >= 0 &&
              c.mor_cod[m] < no,
          "morphism boundary out of range");

  std::vector<int> seen(nm, 0);
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b)
      for (const MorId m : c.hom[a][b]) {
        shape(m >= 0 && m < nm, "hom cell entry out of range");
        shape(c.mor_dom[m] == a && c.mor_cod[m] == b,
              "hom cell holds a morphism with other boundaries");
        ++seen[m];
      }
  for (int m = 0; m < nm; ++m)
    shape(seen[m] == 1, "every morphism must sit in exactly one hom cell");

  for (int a = 0; a < no; ++a) {
    const MorId i = c.identities[a];
    shape(i >= 0 && i < nm, "identity id out of range");
    law(c.mor_dom[i] == a && c.mor_cod[i] == a, "identity boundaries",
        "id at " + c.objects[a] + " has boundaries " +
            c.objects[c.mor_dom[i]] + " -> " + c.objects[c.mor_cod[i]]);
  }

  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      const MorId r = c.comp[g][f];
      if (c.mor_dom[g] != c.mor_cod[f]) {
        law(r == -1, "composition definedness",
            "comp must stay empty off matching boundaries at g=" +
                c.mor_name[g] + ", f=" + c.mor_name[f]);
        continue;
      }
      law(r >= 0 && r < nm, "composition definedness",
          "comp missing at g=" + c.mor_name[g] + ", f=" + c.mor_name[f]);
      law(c.mor_dom[r] == c.mor_dom[f] && c.mor_cod[r] == c.mor_cod[g],
          "composition boundaries",
          "g∘f has the wrong boundaries at g=" + c.mor_name[g] +
              ", f=" + c.mor_name[f]);
    }

  for (int m = 0; m < nm; ++m) {
    law(c.comp[m][c.identities[c.mor_dom[m]]] == m, "right identity",
        "f∘id != f at f=" + c.mor_name[m]);
    law(c.comp[c.identities[c.mor_cod[m]]][m] == m, "left identity",
        "id∘f != f at f=" + c.mor_name[m]);
  }

  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (c.mor_dom[g] != c.mor_cod[f]) continue;
      for (int h = 0; h < nm; ++h) {
        if (c.mor_dom[h] != c.mor_cod[g]) continue;
        law(c.comp[h][c.comp[g][f]] == c.comp[c.comp[h][g]][f],
            "associativity",
            "(h∘g)∘f != h∘(g∘f) with f=" + c.mor_name[f] + ", g=" +
                c.mor_name[g] + ", h=" + c.mor_name[h]);
      }
    }

  if (!c.monoidal) {
    shape(!c.compact, "dual data requires tensor data");
    return;
  }

  shape(c.unit_obj >= 0 && c.unit_obj < no, "tensor unit out of range");
  shape(static_cast<int>(c.tensor_obj.size()) == no &&
            static_cast<int>(c.tensor_mor.size()) == nm &&
            static_cast<int>(c.sym.size()) == no,
        "tensor tables need full rows");
  for (int a = 0; a < no; ++a)
    shape(static_cast<int>(c.tensor_obj[a].size()) == no &&
              static_cast<int>(c.sym[a].size()) == no,
          "tensor tables need full columns");
  for (int f = 0; f < nm; ++f)
    shape(static_cast<int>(c.tensor_mor[f].size()) == nm,
          "tensor tables need full columns");

  const ObjId I = c.unit_obj;
  for (int a = 0; a < no; ++a) {
    shape(c.tensor_obj[a][I] >= 0 && c.tensor_obj[I][a] >= 0,
          "tensor object out of range");
    law(c.tensor_obj[a][I] == a && c.tensor_obj[I][a] == a,
        "tensor object unit",
        "a⊗I or I⊗a differs from a at a=" + c.objects[a]);
  }
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b)
      for (int d = 0; d < no; ++d)
        law(c.tensor_obj[c.tensor_obj[a][b]][d] ==
                c.tensor_obj[a][c.tensor_obj[b][d]],
            "tensor object associativity",
            "(a⊗b)⊗d != a⊗(b⊗d) with a=" + c.objects[a] + ", b=" +
                c.objects[b] + ", d=" + c.objects[d]);

  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      const MorId r = c.tensor_mor[f][g];
      law(r >= 0 && r < nm, "tensor morphism definedness",
          "f⊗g missing at f=" + c.mor_name[f] + ", g=" + c.mor_name[g]);
      law(c.mor_dom[r] == c.tensor_obj[c.mor_dom[f]][c.mor_dom[g]] &&
              c.mor_cod[r] == c.tensor_obj[c.mor_cod[f]][c.mor_cod[g]],
          "tensor morphism boundaries",
          "f⊗g has the wrong boundaries at f=" + c.mor_name[f] + ", g=" +
              c.mor_name[g]);
    }

  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b)
      law(c.tensor_mor[c.identities[a]][c.identities[b]] ==
              c.identities[c.tensor_obj[a][b]],
          "tensor of identities",
          "id_a⊗id_b != id_{a⊗b} with a=" + c.objects[a] + ", b=" +
              c.objects[b]);

  const MorId idI = c.identities[I];
  for (int f = 0; f < nm; ++f)
    law(c.tensor_mor[f][idI] == f && c.tensor_mor[idI][f] == f,
        "tensor morphism unit",
        "f⊗id_I or id_I⊗f differs from f at f=" + c.mor_name[f]);

  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      for (int h = 0; h < nm; ++h)
        law(c.tensor_mor[c.tensor_mor[f][g]][h] ==
                c.tensor_mor[f][c.tensor_mor[g][h]],
            "tensor morphism associativity",
            "(f⊗g)⊗h != f⊗(g⊗h) with f=" + c.mor_name[f] + ", g=" +
                c.mor_name[g] + ", h=" + c.mor_name[h]);

  for (int f1 = 0; f1 < nm; ++f1)
    for (int f2 = 0; f2 < nm; ++f2) {
      if (c.mor_dom[f2] != c.mor_cod[f1]) continue;
      for (int g1 = 0; g1 < nm; ++g1)
        for (int g2 = 0; g2 < nm; ++g2) {
          if (c.mor_dom[g2] != c.mor_cod[g1]) continue;
          law(c.tensor_mor[c.comp[f2][f1]][c.comp[g2][g1]] ==
                  c.comp[c.tensor_mor[f2][g2]][c.tensor_mor[f1][g1]],
              "tensor functoriality",
              "(f2∘f1)⊗(g2∘g1) != (f2⊗g2)∘(f1⊗g1) with f1=" +
                  c.mor_name[f1] + ", f2=" + c.mor_name[f2] + ", g1=" +
                  c.mor_name[g1] + ", g2=" + c.mor_name[g2]);
        }
    }

  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b) {
      const MorId s = c.sym[a][b];
      shape(s >= 0 && s < nm, "symmetry entry out of range");
      law(c.mor_dom[s] == c.tensor_obj[a][b] &&
              c.mor_cod[s] == c.tensor_obj[b][a],
          "symmetry boundaries",
          "sym(a,b) is not a⊗b -> b⊗a at a=" + c.objects[a] + ", b=" +
              c.objects[b]);
      law(c.comp[c.sym[b][a]][s] == c.identities[c.tensor_obj[a][b]],
          "symmetry inverse",
          "sym(b,a)∘sym(a,b) != id with a=" + c.objects[a] + ", b=" +
              c.objects[b]);
    }

  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      law(c.comp[c.sym[c.mor_cod[f]][c.mor_cod[g]]][c.tensor_mor[f][g]] ==
              c.comp[c.tensor_mor[g][f]]
                    [c.sym[c.mor_dom[f]][c.mor_dom[g]]],
          "symmetry naturality",
          "sym∘(f⊗g) != (g⊗f)∘sym with f=" + c.mor_name[f] + ", g=" +
              c.mor_name[g]);

  for (int a = 0; a < no; ++a) {
    for (int b = 0; b < no; ++b)
      for (int d = 0; d < no; ++d)
        law(c.sym[c.tensor_obj[a][b]][d] ==
                c.comp[c.tensor_mor[c.sym[a][d]][c.identities[b]]]
                      [c.tensor_mor[c.identities[a]][c.sym[b][d]]],
            "symmetry hexagon",
            "sym(a⊗b,d) does not factor through the strand moves with a=" +
                c.objects[a] + ", b=" + c.objects[b] + ", d=" +
                c.objects[d]);
    law(c.sym[I][a] == c.identities[a] && c.sym[a][I] == c.identities[a],
        "symmetry on the unit",
        "sym with I is not the identity at a=" + c.objects[a]);
  }

  if (!c.compact) return;

  shape(static_cast<int>(c.dual_obj.size()) == no &&
            static_cast<int>(c.eta.size()) == no &&
            static_cast<int>(c.eps.size()) == no,
        "dual tables need one entry per object");
  for (int a = 0; a < no; ++a)
    shape(c.dual_obj[a] >= 0 && c.dual_obj[a] < no,
          "dual object out of range");
  law(c.dual_obj[I] == I, "dual of the unit", "I* != I");
  for (int a = 0; a < no; ++a) {
    law(c.dual_obj[c.dual_obj[a]] == a, "dual involution",
        "a** != a at a=" + c.objects[a]);
    for (int b = 0; b < no; ++b)
      law(c.dual_obj[c.tensor_obj[a][b]] ==
              c.tensor_obj[c.dual_obj[b]][c.dual_obj[a]],
          "dual of a tensor",
          "(a⊗b)* != b*⊗a* with a=" + c.objects[a] + ", b=" + c.objects[b]);
  }
  for (int a = 0; a < no; ++a) {
    const ObjId ad = c.dual_obj[a];
    const MorId cu = c.eta[a];
    const MorId ca = c.eps[a];
    shape(cu >= 0 && cu < nm && ca >= 0 && ca < nm,
          "bent pair entry out of range");
    law(c.mor_dom[cu] == I && c.mor_cod[cu] == c.tensor_obj[ad][a],
        "bent pair boundaries",
        "eta at " + c.objects[a] + " is not I -> a*⊗a");
    law(c.mor_dom[ca] == c.tensor_obj[a][ad] && c.mor_cod[ca] == I,
        "bent pair boundaries",
        "eps at " + c.objects[a] + " is not a⊗a* -> I");
    law(c.comp[c.tensor_mor[ca][c.identities[a]]]
              [c.tensor_mor[c.identities[a]][cu]] == c.identities[a],
        "zig-zag",
        "(eps⊗id)∘(id⊗eta) != id at a=" + c.objects[a]);
    law(c.comp[c.tensor_mor[c.identities[ad]][ca]]
              [c.tensor_mor[cu][c.identities[ad]]] == c.identities[ad],
        "zig-zag",
        "(id⊗eps)∘(eta⊗id) != id at a=" + c.objects[a]);
  }
}

void validate_profunctor(const FiniteProfunctor& m) {
  shape(m.src != nullptr && m.dst != nullptr,
        "a module needs both base categories");
  const FiniteCategory& s = *m.src;
  const FiniteCategory& d = *m.dst;
  const int ne = m.n_elem();
  shape(static_cast<int>(m.elem_dst.size()) == ne &&
            static_cast<int>(m.elem_name.size()) == ne,
        "element arrays disagree in length");
  shape(static_cast<int>(m.cells.size()) == s.n_obj(),
        "cell table needs a row per source object");
  for (int a = 0; a < s.n_obj(); ++a)
    shape(static_cast<int>(m.cells[a].size()) == d.n_obj(),
          "cell table needs a column per target object");
  shape(static_cast<int>(m.left.size()) == d.n_mor() &&
            static_cast<int>(m.right.size()) == s.n_mor(),
        "action tables need a row per base morphism");
  for (const auto& row : m.left)
    shape(static_cast<int>(row.size()) == ne,
          "action tables need a column per element");
  for (const auto& row : m.right)
    shape(static_cast<int>(row.size()) == ne,
          "action tables need a column per element");

  std::vector<int> seen(ne, 0);
  for (int a = 0; a < s.n_obj(); ++a)
    for (int b = 0; b < d.n_obj(); ++b)
      for (const ElemId e : m.cells[a][b]) {
        shape(e >= 0 && e < ne, "cell entry out of range");
        shape(m.elem_src[e] == a && m.elem_dst[e] == b,
              "cell holds an element with other boundaries");
        ++seen[e];
      }
  for (int e = 0; e < ne; ++e)
    shape(seen[e] == 1, "every element must sit in exactly one cell");

  for (int g = 0; g < d.n_mor(); ++g)
    for (int e = 0; e < ne; ++e) {
      const ElemId r = m.left[g][e];
      if (d.mor_dom[g] != m.elem_dst[e]) {
        law(r == -1, "left action definedness",
            "g·m must stay empty off matching boundaries at g=" +
                d.mor_name[g] + ", m=" + m.elem_name[e]);
        continue;
      }
      law(r >= 0 && r < ne, "left action definedness",
          "g·m missing at g=" + d.mor_name[g] + ", m=" + m.elem_name[e]);
      law(m.elem_src[r] == m.elem_src[e] && m.elem_dst[r] == d.mor_cod[g],
          "left action boundaries",
          "g·m lands in the wrong cell at g=" + d.mor_name[g] + ", m=" +
              m.elem_name[e]);
    }
  for (int f = 0; f < s.n_mor(); ++f)
    for (int e = 0; e < ne; ++e) {
      const ElemId r = m.right[f][e];
      if (s.mor_cod[f] != m.elem_src[e]) {
        law(r == -1, "right action definedness",
            "m·f must stay empty off matching boundaries at f=" +
                s.mor_name[f] + ", m=" + m.elem_name[e]);
        continue;
      }
      law(r >= 0 && r < ne, "right action definedness",
          "m·f missing at f=" + s.mor_name[f] + ", m=" + m.elem_name[e]);
      law(m.elem_src[r] == s.mor_dom[f] && m.elem_dst[r] == m.elem_dst[e],
          "right action boundaries",
          "m·f lands in the wrong cell at f=" + s.mor_name[f] + ", m=" +
              m.elem_name[e]);
    }

  for (int e = 0; e < ne; ++e) {
    law(m.left[d.identities[m.elem_dst[e]]][e] == e, "left action identity",
        "id·m != m at m=" + m.elem_name[e]);
    law(m.right[s.identities[m.elem_src[e]]][e] == e, "right action identity",
        "m·id != m at m=" + m.elem_name[e]);
  }

  for (int g1 = 0; g1 < d.n_mor(); ++g1)
    for (int g2 = 0; g2 < d.n_mor(); ++g2) {
      if (d.mor_dom[g2] != d.mor_cod[g1]) continue;
      for (int e = 0; e < ne; ++e) {
        if (d.mor_dom[g1] != m.elem_dst[e]) continue;
        law(m.left[d.comp[g2][g1]][e] == m.left[g2][m.left[g1][e]],
            "left action composition",
            "(g2∘g1)·m != g2·(g1·m) with g1=" + d.mor_name[g1] + ", g2=" +
                d.mor_name[g2] + ", m=" + m.elem_name[e]);
      }
    }
  for (int f1 = 0; f1 < s.n_mor(); ++f1)
    for (int f2 = 0; f2 < s.n_mor(); ++f2) {
      if (s.mor_cod[f2] != s.mor_dom[f1]) continue;
      for (int e = 0; e < ne; ++e) {
        if (s.mor_cod[f1] != m.elem_src[e]) continue;
        law(m.right[s.comp[f1][f2]][e] == m.right[f2][m.right[f1][e]],
            "right action composition",
            "m·(f1∘f2) != (m·f1)·f2 with f1=" + s.mor_name[f1] + ", f2=" +
                s.mor_name[f2] + ", m=" + m.elem_name[e]);
      }
    }

  for (int g = 0; g < d.n_mor(); ++g)
    for (int f = 0; f < s.n_mor(); ++f)
      for (int e = 0; e < ne; ++e) {
        if (d.mor_dom[g] != m.elem_dst[e]) continue;
        if (s.mor_cod[f] != m.elem_src[e]) continue;
        law(m.right[f][m.left[g][e]] == m.left[g][m.right[f][e]],
            "two-sided action exchange",
            "(g·m)·f != g·(m·f) with g=" + d.mor_name[g] + ", f=" +
                s.mor_name[f] + ", m=" + m.elem_name[e]);
      }

  if (!m.monoidal_data) return;

  shape(s.monoidal && d.monoidal,
        "a pairing needs tensor data on both base categories");
  shape(static_cast<int>(m.box.size()) == ne, "pairing table needs full rows");
  for (const auto& row : m.box)
    shape(static_cast<int>(row.size()) == ne,
          "pairing table needs full columns");
  shape(m.unit_elem >= 0 && m.unit_elem < ne, "pairing unit out of range");
  law(m.elem_src[m.unit_elem] == s.unit_obj &&
          m.elem_dst[m.unit_elem] == d.unit_obj,
      "pairing unit cell", "the unit element must sit over the unit objects");

  for (int e1 = 0; e1 < ne; ++e1)
    for (int e2 = 0; e2 < ne; ++e2) {
      const ElemId r = m.box[e1][e2];
      law(r >= 0 && r < ne, "pairing definedness",
          "m1⊠m2 missing at m1=" + m.elem_name[e1] + ", m2=" +
              m.elem_name[e2]);
      law(m.elem_src[r] == s.tensor_obj[m.elem_src[e1]][m.elem_src[e2]] &&
              m.elem_dst[r] == d.tensor_obj[m.elem_dst[e1]][m.elem_dst[e2]],
          "pairing boundaries",
          "m1⊠m2 lands in the wrong cell at m1=" + m.elem_name[e1] +
              ", m2=" + m.elem_name[e2]);
    }

  for (int e = 0; e < ne; ++e)
    law(m.box[m.unit_elem][e] == e && m.box[e][m.unit_elem] == e,
        "pairing unit",
        "I⊠m or m⊠I differs from m at m=" + m.elem_name[e]);

  for (int e1 = 0; e1 < ne; ++e1)
    for (int e2 = 0; e2 < ne; ++e2)
      for (int e3 = 0; e3 < ne; ++e3)
        law(m.box[m.box[e1][e2]][e3] == m.box[e1][m.box[e2][e3]],
            "pairing associativity",
            "(m1⊠m2)⊠m3 != m1⊠(m2⊠m3) with m1=" + m.elem_name[e1] +
                ", m2=" + m.elem_name[e2] + ", m3=" + m.elem_name[e3]);

  for (int g1 = 0; g1 < d.n_mor(); ++g1)
    for (int g2 = 0; g2 < d.n_mor(); ++g2)
      for (int e1 = 0; e1 < ne; ++e1) {
        if (d.mor_dom[g1] != m.elem_dst[e1]) continue;
        for (int e2 = 0; e2 < ne; ++e2) {
          if (d.mor_dom[g2] != m.elem_dst[e2]) continue;
          law(m.left[d.tensor_mor[g1][g2]][m.box[e1][e2]] ==
                  m.box[m.left[g1][e1]][m.left[g2][e2]],
              "pairing left compatibility",
              "(g1⊗g2)·(m1⊠m2) != (g1·m1)⊠(g2·m2) with g1=" +
                  d.mor_name[g1] + ", g2=" + d.mor_name[g2] + ", m1=" +
                  m.elem_name[e1] + ", m2=" + m.elem_name[e2]);
        }
      }
  for (int f1 = 0; f1 < s.n_mor(); ++f1)
    for (int f2 = 0; f2 < s.n_mor(); ++f2)
      for (int e1 = 0; e1 < ne; ++e1) {
        if (s.mor_cod[f1] != m.elem_src[e1]) continue;
        for (int e2 = 0; e2 < ne; ++e2) {
          if (s.mor_cod[f2] != m.elem_src[e2]) continue;
          law(m.right[s.tensor_mor[f1][f2]][m.box[e1][e2]] ==
                  m.box[m.right[f1][e1]][m.right[f2][e2]],
              "pairing right compatibility",
              "(m1⊠m2)·(f1⊗f2) != (m1·f1)⊠(m2·f2) with f1=" +
                  s.mor_name[f1] + ", f2=" + s.mor_name[f2] + ", m1=" +
                  m.elem_name[e1] + ", m2=" + m.elem_name[e2]);
        }
      }

  for (int e1 = 0; e1 < ne; ++e1)
    for (int e2 = 0; e2 < ne; ++e2)
      law(m.left[d.sym[m.elem_dst[e1]][m.elem_dst[e2]]][m.box[e1][e2]] ==
              m.right[s.sym[m.elem_src[e1]][m.elem_src[e2]]]
                     [m.box[e2][e1]],
          "pairing symmetry",
          "sym·(m1⊠m2) != (m2⊠m1)·sym with m1=" + m.elem_name[e1] +
              ", m2=" + m.elem_name[e2]);
}

namespace {

// Unit laws shared by pointed endo data and full monoids. monoidal_laws
// additionally ties the unit to the pairing.
void check_unit(const FiniteProfunctor& m, const std::vector<ElemId>& unit,
                bool monoidal_laws) {
  shape(m.src == m.dst, "a unit needs an endo module");
  const FiniteCategory& c = *m.src;
  const int nm = c.n_mor();
  const int ne = m.n_elem();
  shape(static_cast<int>(unit.size()) == nm,
        "the unit table needs one entry per base morphism");
  for (int f = 0; f < nm; ++f) {
    shape(unit[f] >= 0 && unit[f] < ne, "unit entry out of range");
    law(m.elem_src[unit[f]] == c.mor_dom[f] &&
            m.elem_dst[unit[f]] == c.mor_cod[f],
        "unit cell",
        "i(f) must sit in the cell of f's boundaries at f=" + c.mor_name[f]);
  }
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (c.mor_dom[g] != c.mor_cod[f]) continue;
      law(m.left[g][unit[f]] == unit[c.comp[g][f]], "unit left equivariance",
          "g·i(f) != i(g∘f) with g=" + c.mor_name[g] + ", f=" +
              c.mor_name[f]);
      law(m.right[f][unit[g]] == unit[c.comp[g][f]],
          "unit right equivariance",
          "i(g)·f != i(g∘f) with g=" + c.mor_name[g] + ", f=" +
              c.mor_name[f]);
    }
  if (monoidal_laws && m.monoidal_data) {
    law(unit[c.identities[c.unit_obj]] == m.unit_elem,
        "unit of the tensor unit", "i(id_I) != I");
    for (int f = 0; f < nm; ++f)
      for (int g = 0; g < nm; ++g)
        law(unit[c.tensor_mor[f][g]] == m.box[unit[f]][unit[g]],
            "unit of tensors",
            "i(f⊗g) != i(f)⊠i(g) with f=" + c.mor_name[f] + ", g=" +
                c.mor_name[g]);
  }
}

}  // namespace

void validate_pointed(const PointedEndo& p) {
  validate_profunctor(p.m);
  shape(p.m.monoidal_data, "a pointed endo module needs the pairing block");
  check_unit(p.m, p.unit, true);
}

void validate_prof_monoid(const ProfMonoid& n) {
  validate_profunctor(n.m);
  check_unit(n.m, n.unit, true);
  const FiniteProfunctor& m = n.m;
  const int ne = m.n_elem();
  shape(static_cast<int>(n.mult.size()) == ne,
        "the multiplication table needs full rows");
  for (const auto& row : n.mult)
    shape(static_cast<int>(row.size()) == ne,
          "the multiplication table needs full columns");

  for (int n2 = 0; n2 < ne; ++n2)
    for (int n1 = 0; n1 < ne; ++n1) {
      const ElemId r = n.mult[n2][n1];
      if (m.elem_src[n2] != m.elem_dst[n1]) {
        law(r == -1, "multiplication definedness",
            "n2•n1 must stay empty off chaining cells at n2=" +
                m.elem_name[n2] + ", n1=" + m.elem_name[n1]);
        continue;
      }
      law(r >= 0 && r < ne, "multiplication definedness",
          "n2•n1 missing at n2=" + m.elem_name[n2] + ", n1=" +
              m.elem_name[n1]);
      law(m.elem_src[r] == m.elem_src[n1] && m.elem_dst[r] == m.elem_dst[n2],
          "multiplication boundaries",
          "n2•n1 lands in the wrong cell at n2=" + m.elem_name[n2] +
              ", n1=" + m.elem_name[n1]);
    }

  const FiniteCategory& c = *m.src;
  for (int e = 0; e < ne; ++e)
    for (int f = 0; f < c.n_mor(); ++f) {
      if (c.mor_cod[f] == m.elem_src[e])
        law(n.mult[e][n.unit[f]] == m.right[f][e], "right unit absorption",
            "m•i(f) != m·f with m=" + m.elem_name[e] + ", f=" +
                c.mor_name[f]);
      if (c.mor_dom[f] == m.elem_dst[e])
        law(n.mult[n.unit[f]][e] == m.left[f][e], "left unit absorption",
            "i(f)•m != f·m with m=" + m.elem_name[e] + ", f=" +
                c.mor_name[f]);
    }

  for (int e1 = 0; e1 < ne; ++e1)
    for (int e2 = 0; e2 < ne; ++e2) {
      if (m.elem_src[e2] != m.elem_dst[e1]) continue;
      for (int e3 = 0; e3 < ne; ++e3) {
        if (m.elem_src[e3] != m.elem_dst[e2]) continue;
        law(n.mult[e3][n.mult[e2][e1]] == n.mult[n.mult[e3][e2]][e1],
            "multiplication associativity",
            "(n3•n2)•n1 != n3•(n2•n1) with n1=" + m.elem_name[e1] +
                ", n2=" + m.elem_name[e2] + ", n3=" + m.elem_name[e3]);
      }
    }

  if (m.monoidal_data) {
    for (int a2 = 0; a2 < ne; ++a2)
      for (int a1 = 0; a1 < ne; ++a1) {
        if (m.elem_src[a2] != m.elem_dst[a1]) continue;
        for (int b2 = 0; b2 < ne; ++b2)
          for (int b1 = 0; b1 < ne; ++b1) {
            if (m.elem_src[b2] != m.elem_dst[b1]) continue;
            law(n.mult[m.box[a2][b2]][m.box[a1][b1]] ==
                    m.box[n.mult[a2][a1]][n.mult[b2][b1]],
                "multiplication exchange",
                "(a2⊠b2)•(a1⊠b1) != (a2•a1)⊠(b2•b1) with a1=" +
                    m.elem_name[a1] + ", a2=" + m.elem_name[a2] + ", b1=" +
                    m.elem_name[b1] + ", b2=" + m.elem_name[b2]);
          }
      }
  }
}

PointedEndo forget_mult(const ProfMonoid& n) {
  shape(n.m.monoidal_data,
        "only modules with the pairing block can forget down to a point");
  return PointedEndo{n.m, n.unit};
}

Collapsed collapse(const ProfMonoid& n) {
  validate_prof_monoid(n);
  const FiniteProfunctor& m = n.m;
  const FiniteCategory& c = *m.src;
  FiniteCategory out;
  out.name = "collapse over " + c.name;
  out.objects = c.objects;
  out.mor_dom = m.elem_src;
  out.mor_cod = m.elem_dst;
  out.mor_name = m.elem_name;
  out.hom = m.cells;
  out.identities.resize(c.n_obj());
  for (int a = 0; a < c.n_obj(); ++a)
    out.identities[a] = n.unit[c.identities[a]];
  out.comp = n.mult;
  if (m.monoidal_data) {
    out.monoidal = true;
    out.unit_obj = c.unit_obj;
    out.tensor_obj = c.tensor_obj;
    out.tensor_mor = m.box;
    out.sym.assign(c.n_obj(), std::vector<MorId>(c.n_obj(), -1));
    for (int a = 0; a < c.n_obj(); ++a)
      for (int b = 0; b < c.n_obj(); ++b)
        out.sym[a][b] = n.unit[c.sym[a][b]];
    if (c.compact) {
      out.compact = true;
      out.dual_obj = c.dual_obj;
      out.eta.resize(c.n_obj());
      out.eps.resize(c.n_obj());
      for (int a = 0; a < c.n_obj(); ++a) {
        out.eta[a] = n.unit[c.eta[a]];
        out.eps[a] = n.unit[c.eps[a]];
      }
    }
  }
  validate_category(out);
  return Collapsed{std::move(out), n.unit};
}

ProfMonoid derive_mult(const PointedEndo& p) {
  validate_pointed(p);
  const FiniteProfunctor& m = p.m;
  const FiniteCategory& c = *m.src;
  if (!c.compact)
    fail(Errc::not_compact, "the base category carries no duals");
  const int ne = m.n_elem();
  ProfMonoid out{p.m, p.unit, {}};
  out.mult.assign(ne, std::vector<ElemId>(ne, -1));
  for (int n2 = 0; n2 < ne; ++n2)
    for (int n1 = 0; n1 < ne; ++n1) {
      if (m.elem_src[n2] != m.elem_dst[n1]) continue;
      const ObjId a = m.elem_src[n1];
      const ObjId b = m.elem_dst[n1];
      const ObjId e = m.elem_dst[n2];
      const ObjId bd = c.dual_obj[b];
      const ElemId mid = need(m.box, need(m.box, n1, p.unit[c.identities[bd]],
                                          "pairing"),
                              n2, "pairing");
      const MorId bend_in = c.tensor_mor[c.identities[a]][c.eta[b]];
      const MorId bend_out = c.tensor_mor[c.eps[b]][c.identities[e]];
      out.mult[n2][n1] =
          need(m.left, bend_out, need(m.right, bend_in, mid, "right action"),
               "left action");
    }
  return out;
}

ElemId hom_shift_forward(const PointedEndo& p, ElemId m) {
  const FiniteProfunctor& mod = p.m;
  const FiniteCategory& c = *mod.src;
  if (!c.compact)
    fail(Errc::not_compact, "the base category carries no duals");
  shape(m >= 0 && m < mod.n_elem(), "element id out of range");
  const ObjId a = mod.elem_src[m];
  const ObjId ad = c.dual_obj[a];
  const ElemId boxed =
      need(mod.box, p.unit[c.identities[ad]], m, "pairing");
  return need(mod.right, c.eta[a], boxed, "right action");
}

ElemId hom_shift_inverse(const PointedEndo& p, ObjId a, ObjId b, ElemId m2) {
  const FiniteProfunctor& mod = p.m;
  const FiniteCategory& c = *mod.src;
  if (!c.compact)
    fail(Errc::not_compact, "the base category carries no duals");
  shape(m2 >= 0 && m2 < mod.n_elem(), "element id out of range");
  const ObjId ad = c.dual_obj[a];
  if (mod.elem_src[m2] != c.unit_obj ||
      mod.elem_dst[m2] != c.tensor_obj[ad][b])
    fail(Errc::type_mismatch,
         "the element does not sit in the bent cell of the given pair");
  const ElemId boxed = need(mod.box, p.unit[c.identities[a]], m2, "pairing");
  const MorId straighten = c.tensor_mor[c.eps[a]][c.identities[b]];
  return need(mod.left, straighten, boxed, "left action");
}

SpreadResult copresheaf_to_monoid(const FiniteCopresheaf& mc) {
  validate_copresheaf(mc);
  const FiniteCategory& c = *mc.base;
  if (!c.compact)
    fail(Errc::not_compact, "the base category carries no duals");
  const int no = c.n_obj();

  // Position of each carrier element inside its own object list.
  std::vector<int> pos(mc.n_elem(), -1);
  for (int a = 0; a < no; ++a)
    for (int i = 0; i < static_cast<int>(mc.sets[a].size()); ++i)
      pos[mc.sets[a][i]] = i;

  FiniteProfunctor fm;
  fm.src = &c;
  fm.dst = &c;
  fm.cells.assign(no, std::vector<std::vector<ElemId>>(no));
  std::vector<std::vector<int>> base_id(no, std::vector<int>(no, -1));
  SpreadResult res;
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b) {
      base_id[a][b] = fm.n_elem();
      const ObjId carrier = c.tensor_obj[c.dual_obj[a]][b];
      for (const ElemId e : mc.sets[carrier]) {
        const ElemId id = fm.n_elem();
        fm.cells[a][b].push_back(id);
        fm.elem_src.push_back(a);
        fm.elem_dst.push_back(b);
        fm.elem_name.push_back(mc.elem_name[e] + "@(" + c.objects[a] + "," +
                               c.objects[b] + ")");
        res.origin_a.push_back(a);
        res.origin_b.push_back(b);
        res.origin_elem.push_back(e);
      }
    }
  const int ne = fm.n_elem();
  auto spread_id = [&](ObjId a, ObjId b, ElemId carrier_elem) {
    return base_id[a][b] + pos[carrier_elem];
  };

  fm.right.assign(c.n_mor(), std::vector<ElemId>(ne, -1));
  fm.left.assign(c.n_mor(), std::vector<ElemId>(ne, -1));
  for (int e = 0; e < ne; ++e) {
    const ObjId a = res.origin_a[e];
    const ObjId b = res.origin_b[e];
    const ElemId base_elem = res.origin_elem[e];
    for (int f = 0; f < c.n_mor(); ++f) {
      if (c.mor_cod[f] == a) {
        const MorId t =
            c.tensor_mor[dual_morphism(c, f)][c.identities[b]];
        fm.right[f][e] = spread_id(c.mor_dom[f], b,
                                   need(mc.action, t, base_elem, "action"));
      }
      if (c.mor_dom[f] == b) {
        const MorId t =
            c.tensor_mor[c.identities[c.dual_obj[a]]][f];
        fm.left[f][e] = spread_id(a, c.mor_cod[f],
                                  need(mc.action, t, base_elem, "action"));
      }
    }
  }

  fm.monoidal_data = true;
  fm.box.assign(ne, std::vector<ElemId>(ne, -1));
  for (int e1 = 0; e1 < ne; ++e1)
    for (int e2 = 0; e2 < ne; ++e2) {
      const ObjId a = res.origin_a[e1], b = res.origin_b[e1];
      const ObjId a2 = res.origin_a[e2], b2 = res.origin_b[e2];
      const ElemId raw = mc.mu[res.origin_elem[e1]][res.origin_elem[e2]];
      // a*⊗b⊗a2*⊗b2 -> a2*⊗a*⊗b⊗b2, the strict shuffle into the
      // bent carrier of the tensored pair.
      const ObjId ad = c.dual_obj[a], a2d = c.dual_obj[a2];
      const MorId inner =
          c.tensor_mor[c.tensor_mor[c.identities[ad]][c.sym[b][a2d]]]
                      [c.identities[b2]];
      const MorId outer =
          c.tensor_mor[c.tensor_mor[c.sym[ad][a2d]][c.identities[b]]]
                      [c.identities[b2]];
      const ElemId moved = need(
          mc.action, outer, need(mc.action, inner, raw, "action"), "action");
      fm.box[e1][e2] =
          spread_id(c.tensor_obj[a][a2], c.tensor_obj[b][b2], moved);
    }
  fm.unit_elem = spread_id(
      c.unit_obj, c.unit_obj,
      need(mc.action, c.eta[c.unit_obj], mc.unit_elem, "action"));

  res.pointed.m = std::move(fm);
  res.pointed.unit.assign(c.n_mor(), -1);
  for (int f = 0; f < c.n_mor(); ++f) {
    const ObjId cd = c.mor_dom[f];
    const MorId bend =
        c.comp[c.tensor_mor[c.identities[c.dual_obj[cd]]][f]][c.eta[cd]];
    res.pointed.unit[f] = spread_id(
        cd, c.mor_cod[f], need(mc.action, bend, mc.unit_elem, "action"));
  }
  res.monoid = derive_mult(res.pointed);
  return res;
}

RestrictResult monoid_to_copresheaf(const PointedEndo& n) {
  validate_pointed(n);
  const FiniteProfunctor& m = n.m;
  const FiniteCategory& c = *m.src;
  const int no = c.n_obj();
  RestrictResult res;
  FiniteCopresheaf& un = res.copresheaf;
  un.base = &c;
  un.sets.assign(no, {});
  std::vector<int> new_id(m.n_elem(), -1);
  for (int a = 0; a < no; ++a)
    for (const ElemId e : m.cells[c.unit_obj][a]) {
      new_id[e] = un.n_elem();
      un.sets[a].push_back(new_id[e]);
      un.elem_at.push_back(a);
      un.elem_name.push_back(m.elem_name[e]);
      res.origin_elem.push_back(e);
    }
  const int ne = un.n_elem();
  un.action.assign(c.n_mor(), std::vector<ElemId>(ne, -1));
  for (int e = 0; e < ne; ++e)
    for (int f = 0; f < c.n_mor(); ++f) {
      if (c.mor_dom[f] != un.elem_at[e]) continue;
      un.action[f][e] = new_id[need(m.left, f, res.origin_elem[e],
                                    "left action")];
    }
  un.mu.assign(ne, std::vector<ElemId>(ne, -1));
  for (int e1 = 0; e1 < ne; ++e1)
    for (int e2 = 0; e2 < ne; ++e2)
      un.mu[e1][e2] = new_id[need(m.box, res.origin_elem[e1],
                                  res.origin_elem[e2], "pairing")];
  un.unit_elem = new_id[m.unit_elem];
  return res;
}

MorId dual_morphism(const FiniteCategory& c, MorId f) {
  if (!c.compact)
    fail(Errc::not_compact, "the base category carries no duals");
  shape(f >= 0 && f < c.n_mor(), "morphism id out of range");
  const ObjId x = c.mor_dom[f], y = c.mor_cod[f];
  const ObjId xd = c.dual_obj[x], yd = c.dual_obj[y];
  const MorId bend = c.tensor_mor[c.eta[x]][c.identities[yd]];
  const MorId across = c.tensor_mor[c.tensor_mor[c.identities[xd]][f]]
                                   [c.identities[yd]];
  const MorId straighten = c.tensor_mor[c.identities[xd]][c.eps[y]];
  return c.comp[straighten][c.comp[across][bend]];
}

void validate_copresheaf(const FiniteCopresheaf& m) {
  shape(m.base != nullptr, "a carrier needs a base category");
  const FiniteCategory& c = *m.base;
  shape(c.monoidal, "the lax pairing needs tensor data on the base");
  const int no = c.n_obj();
  const int ne = m.n_elem();
  shape(static_cast<int>(m.sets.size()) == no,
        "one carrier list per object required");
  shape(static_cast<int>(m.elem_name.size()) == ne,
        "element arrays disagree in length");
  std::vector<int> seen(ne, 0);
  for (int a = 0; a < no; ++a)
    for (const ElemId e : m.sets[a]) {
      shape(e >= 0 && e < ne, "carrier entry out of range");
      shape(m.elem_at[e] == a, "carrier holds an element of another object");
      ++seen[e];
    }
  for (int e = 0; e < ne; ++e)
    shape(seen[e] == 1, "every element must sit in exactly one carrier");
  shape(static_cast<int>(m.action.size()) == c.n_mor(),
        "action table needs a row per morphism");
  for (const auto& row : m.action)
    shape(static_cast<int>(row.size()) == ne,
          "action table needs a column per element");

  for (int f = 0; f < c.n_mor(); ++f)
    for (int e = 0; e < ne; ++e) {
      const ElemId r = m.action[f][e];
      if (c.mor_dom[f] != m.elem_at[e]) {
        law(r == -1, "action definedness",
            "the action must stay empty off matching objects at f=" +
                c.mor_name[f] + ", x=" + m.elem_name[e]);
        continue;
      }
      law(r >= 0 && r < ne, "action definedness",
          "the action is missing at f=" + c.mor_name[f] + ", x=" +
              m.elem_name[e]);
      law(m.elem_at[r] == c.mor_cod[f], "action boundaries",
          "f·x sits over the wrong object at f=" + c.mor_name[f] + ", x=" +
              m.elem_name[e]);
    }
  for (int e = 0; e < ne; ++e)
    law(m.action[c.identities[m.elem_at[e]]][e] == e, "action identity",
        "id·x != x at x=" + m.elem_name[e]);
  for (int f1 = 0; f1 < c.n_mor(); ++f1)
    for (int f2 = 0; f2 < c.n_mor(); ++f2) {
      if (c.mor_dom[f2] != c.mor_cod[f1]) continue;
      for (int e = 0; e < ne; ++e) {
        if (c.mor_dom[f1] != m.elem_at[e]) continue;
        law(m.action[c.comp[f2][f1]][e] == m.action[f2][m.action[f1][e]],
            "action functoriality",
            "(f2∘f1)·x != f2·(f1·x) with f1=" + c.mor_name[f1] + ", f2=" +
                c.mor_name[f2] + ", x=" + m.elem_name[e]);
      }
    }

  shape(static_cast<int>(m.mu.size()) == ne, "pairing table needs full rows");
  for (const auto& row : m.mu)
    shape(static_cast<int>(row.size()) == ne,
          "pairing table needs full columns");
  shape(m.unit_elem >= 0 && m.unit_elem < ne, "pairing unit out of range");
  law(m.elem_at[m.unit_elem] == c.unit_obj, "pairing unit cell",
      "the unit element must sit over the unit object");
  for (int e1 = 0; e1 < ne; ++e1)
    for (int e2 = 0; e2 < ne; ++e2) {
      const ElemId r = m.mu[e1][e2];
      law(r >= 0 && r < ne, "pairing definedness",
          "mu missing at x=" + m.elem_name[e1] + ", y=" + m.elem_name[e2]);
      law(m.elem_at[r] == c.tensor_obj[m.elem_at[e1]][m.elem_at[e2]],
          "pairing boundaries",
          "mu(x,y) sits over the wrong object at x=" + m.elem_name[e1] +
              ", y=" + m.elem_name[e2]);
    }
  for (int e = 0; e < ne; ++e)
    law(m.mu[m.unit_elem][e] == e && m.mu[e][m.unit_elem] == e,
        "pairing unit",
        "mu with the unit differs from the element at x=" + m.elem_name[e]);
  for (int e1 = 0; e1 < ne; ++e1)
    for (int e2 = 0; e2 < ne; ++e2)
      for (int e3 = 0; e3 < ne; ++e3)
        law(m.mu[m.mu[e1][e2]][e3] == m.mu[e1][m.mu[e2][e3]],
            "pairing associativity",
            "mu is not associative with x=" + m.elem_name[e1] + ", y=" +
                m.elem_name[e2] + ", z=" + m.elem_name[e3]);
  for (int f = 0; f < c.n_mor(); ++f)
    for (int g = 0; g < c.n_mor(); ++g)
      for (int e1 = 0; e1 < ne; ++e1) {
        if (c.mor_dom[f] != m.elem_at[e1]) continue;
        for (int e2 = 0; e2 < ne; ++e2) {
          if (c.mor_dom[g] != m.elem_at[e2]) continue;
          law(m.mu[m.action[f][e1]][m.action[g][e2]] ==
                  m.action[c.tensor_mor[f][g]][m.mu[e1][e2]],
              "pairing naturality",
              "mu(f·x,g·y) != (f⊗g)·mu(x,y) with f=" + c.mor_name[f] +
                  ", g=" + c.mor_name[g] + ", x=" + m.elem_name[e1] +
                  ", y=" + m.elem_name[e2]);
        }
      }
  for (int e1 = 0; e1 < ne; ++e1)
    for (int e2 = 0; e2 < ne; ++e2)
      law(m.action[c.sym[m.elem_at[e1]][m.elem_at[e2]]][m.mu[e1][e2]] ==
              m.mu[e2][e1],
          "pairing symmetry",
          "sym·mu(x,y) != mu(y,x) with x=" + m.elem_name[e1] + ", y=" +
              m.elem_name[e2]);
}

}  // namespace cobcat
