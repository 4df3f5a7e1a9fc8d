#include <string>
#include <vector>

#include "cobcat/prof.hpp"

namespace cobcat {

FiniteCategory cyclic_group_category(int n) {
  if (n <= 0) fail(Errc::index_out_of_range, "the group order must be positive");
  FiniteCategory c;
  c.name = "Z/" + std::to_string(n);
  for (int a = 0; a < n; ++a) c.objects.push_back(std::to_string(a));
  c.hom.assign(n, std::vector<std::vector<MorId>>(n));
  for (int a = 0; a < n; ++a) {
    c.mor_dom.push_back(a);
    c.mor_cod.push_back(a);
    c.mor_name.push_back("id_" + c.objects[a]);
    c.hom[a][a].push_back(a);
    c.identities.push_back(a);
  }
  c.comp.assign(n, std::vector<MorId>(n, -1));
  for (int a = 0; a < n; ++a) c.comp[a][a] = a;
  c.monoidal = true;
  c.unit_obj = 0;
  c.tensor_obj.assign(n, std::vector<ObjId>(n));
  c.tensor_mor.assign(n, std::vector<MorId>(n));
  c.sym.assign(n, std::vector<MorId>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int s = (a + b) % n;
      c.tensor_obj[a][b] = s;
      c.tensor_mor[a][b] = s;  // morphism ids coincide with object ids
      c.sym[a][b] = s;
    }
  c.compact = true;
  for (int a = 0; a < n; ++a) {
    c.dual_obj.push_back((n - a) % n);
    c.eta.push_back(0);
    c.eps.push_back(0);
  }
  return c;
}

namespace {

// FinRel skeleton morphisms are determined by boundaries plus whether the
// relation holds anywhere; with sets of size 0 and 1 that is one bit.
MorId finrel_find(int dom, int cod, bool nonempty) {
  if (dom == 0 && cod == 0) return 0;
  if (dom == 0 && cod == 1) return 1;
  if (dom == 1 && cod == 0) return 2;
  return nonempty ? 4 : 3;
}

}  // namespace

FiniteCategory finrel01_category() {
  FiniteCategory c;
  c.name = "FinRel01";
  c.objects = {"0", "1"};
  struct Rel {
    int dom, cod;
    bool ne;
  };
  const std::vector<Rel> rels = {
      {0, 0, false}, {0, 1, false}, {1, 0, false}, {1, 1, false}, {1, 1, true}};
  c.hom.assign(2, std::vector<std::vector<MorId>>(2));
  for (int i = 0; i < static_cast<int>(rels.size()); ++i) {
    c.mor_dom.push_back(rels[i].dom);
    c.mor_cod.push_back(rels[i].cod);
    c.mor_name.push_back(std::string(rels[i].ne ? "total(" : "empty(") +
                         std::to_string(rels[i].dom) + "," +
                         std::to_string(rels[i].cod) + ")");
    c.hom[rels[i].dom][rels[i].cod].push_back(i);
  }
  c.identities = {0, 4};
  const int nm = c.n_mor();
  c.comp.assign(nm, std::vector<MorId>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (rels[g].dom != rels[f].cod) continue;
      c.comp[g][f] = finrel_find(rels[f].dom, rels[g].cod,
                                 rels[f].ne && rels[g].ne);
    }
  c.monoidal = true;
  c.unit_obj = 1;
  c.tensor_obj = {{0, 0}, {0, 1}};
  c.tensor_mor.assign(nm, std::vector<MorId>(nm));
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      c.tensor_mor[f][g] =
          finrel_find(rels[f].dom * rels[g].dom, rels[f].cod * rels[g].cod,
                      rels[f].ne && rels[g].ne);
  c.sym.assign(2, std::vector<MorId>(2));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) c.sym[a][b] = c.identities[a * b];
  c.compact = true;
  c.dual_obj = {0, 1};
  c.eta = {finrel_find(1, 0, false), 4};
  c.eps = {finrel_find(0, 1, false), 4};
  return c;
}

bool finrel01_nonempty(const FiniteCategory& c, MorId f) {
  if (f < 0 || f >= c.n_mor())
    fail(Errc::index_out_of_range, "morphism id out of range");
  return c.mor_name[f].rfind("total", 0) == 0;
}

ProfMonoid hom_monoid(const FiniteCategory& c) {
  validate_category(c);
  ProfMonoid n;
  n.m.src = &c;
  n.m.dst = &c;
  n.m.cells = c.hom;
  n.m.elem_src = c.mor_dom;
  n.m.elem_dst = c.mor_cod;
  n.m.elem_name = c.mor_name;
  const int nm = c.n_mor();
  n.m.left.assign(nm, std::vector<ElemId>(nm, -1));
  n.m.right.assign(nm, std::vector<ElemId>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      n.m.left[g][f] = c.comp[g][f];
      n.m.right[g][f] = c.comp[f][g];
    }
  if (c.monoidal) {
    n.m.monoidal_data = true;
    n.m.box = c.tensor_mor;
    n.m.unit_elem = c.identities[c.unit_obj];
  }
  n.unit.resize(nm);
  for (int f = 0; f < nm; ++f) n.unit[f] = f;
  n.mult = c.comp;
  return n;
}

PointedEndo relation_pointed(const FiniteCategory& g,
                             const std::vector<bool>& pairs) {
  validate_category(g);
  const int no = g.n_obj();
  if (!g.monoidal)
    fail(Errc::type_mismatch, "the base category carries no tensor");
  if (static_cast<int>(pairs.size()) != no * no)
    fail(Errc::type_mismatch, "one flag per object pair required");
  if (g.n_mor() != no)
    fail(Errc::type_mismatch,
         "the base must have exactly the identity morphisms");
  for (int a = 0; a < no; ++a)
    if (!pairs[a * no + a])
      fail(Errc::law_violation,
           "unit cell: the relation misses the diagonal pair (" +
               g.objects[a] + "," + g.objects[a] + ")");

  PointedEndo p;
  p.m.src = &g;
  p.m.dst = &g;
  p.m.cells.assign(no, std::vector<std::vector<ElemId>>(no));
  std::vector<int> at(no * no, -1);
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b) {
      if (!pairs[a * no + b]) continue;
      at[a * no + b] = p.m.n_elem();
      p.m.cells[a][b].push_back(at[a * no + b]);
      p.m.elem_src.push_back(a);
      p.m.elem_dst.push_back(b);
      p.m.elem_name.push_back("(" + g.objects[a] + "," + g.objects[b] + ")");
    }
  const int ne = p.m.n_elem();
  p.m.left.assign(no, std::vector<ElemId>(ne, -1));
  p.m.right.assign(no, std::vector<ElemId>(ne, -1));
  for (int e = 0; e < ne; ++e) {
    p.m.left[g.identities[p.m.elem_dst[e]]][e] = e;
    p.m.right[g.identities[p.m.elem_src[e]]][e] = e;
  }
  p.m.monoidal_data = true;
  p.m.box.assign(ne, std::vector<ElemId>(ne, -1));
  for (int e1 = 0; e1 < ne; ++e1)
    for (int e2 = 0; e2 < ne; ++e2) {
      const int a = g.tensor_obj[p.m.elem_src[e1]][p.m.elem_src[e2]];
      const int b = g.tensor_obj[p.m.elem_dst[e1]][p.m.elem_dst[e2]];
      if (at[a * no + b] < 0)
        fail(Errc::law_violation,
             "pairing definedness: the relation is not closed under the "
             "tensor at " +
                 p.m.elem_name[e1] + " with " + p.m.elem_name[e2]);
      p.m.box[e1][e2] = at[a * no + b];
    }
  p.m.unit_elem = at[g.unit_obj * no + g.unit_obj];
  p.unit.resize(no);
  for (int a = 0; a < no; ++a) p.unit[g.identities[a]] = at[a * no + a];
  return p;
}

std::vector<std::vector<bool>> reflexive_multiplicative_relations(
    const FiniteCategory& g) {
  validate_category(g);
  const int no = g.n_obj();
  if (!g.monoidal) fail(Errc::type_mismatch, "the base carries no tensor");
  std::vector<std::vector<bool>> out;
  const unsigned total = 1u << (no * no);
  for (unsigned mask = 0; mask < total; ++mask) {
    std::vector<bool> pairs(no * no);
    for (int i = 0; i < no * no; ++i) pairs[i] = (mask >> i) & 1u;
    bool ok = true;
    for (int a = 0; a < no && ok; ++a) ok = pairs[a * no + a];
    for (int i = 0; i < no * no && ok; ++i) {
      if (!pairs[i]) continue;
      for (int j = 0; j < no * no && ok; ++j) {
        if (!pairs[j]) continue;
        const int a = g.tensor_obj[i / no][j / no];
        const int b = g.tensor_obj[i % no][j % no];
        ok = pairs[a * no + b];
      }
    }
    if (ok) out.push_back(std::move(pairs));
  }
  return out;
}

}  // namespace cobcat
