#include "cobcat/axioms.hpp"

#include <algorithm>

#include "cobcat/error.hpp"
#include "cobcat/gadgets.hpp"

namespace cobcat {

namespace {

ExprPtr finish(MorExpr e) { return std::make_shared<const MorExpr>(std::move(e)); }

Word prefix(const Word& w, int k) {
  return Word(w.begin(), w.begin() + k);
}
Word suffix(const Word& w, int k) {
  return Word(w.begin() + k, w.end());
}

}  // namespace

ExprPtr ebox(std::string name, Word dom, Word cod) {
  MorExpr e{MorExpr::Kind::box, std::move(name), {}, {}, nullptr, nullptr, 0,
            {}, {}};
  e.dom = dom;
  e.cod = cod;
  e.w1 = std::move(dom);
  e.w2 = std::move(cod);
  return finish(std::move(e));
}

ExprPtr eid(Word w) {
  MorExpr e{MorExpr::Kind::identity, {}, w, {}, nullptr, nullptr, 0, w, w};
  return finish(std::move(e));
}

ExprPtr esym(Word x, Word y) {
  MorExpr e{MorExpr::Kind::symmetry, {}, x, y, nullptr, nullptr, 0,
            concat(x, y), concat(y, x)};
  return finish(std::move(e));
}

ExprPtr ecomp(ExprPtr a, ExprPtr b) {
  require(a->cod == b->dom, Errc::type_mismatch,
          "expression composition boundary mismatch");
  MorExpr e{MorExpr::Kind::compose, {}, {}, {}, a, b, 0, a->dom, b->cod};
  return finish(std::move(e));
}

ExprPtr etens(ExprPtr a, ExprPtr b) {
  MorExpr e{MorExpr::Kind::tensor, {}, {}, {}, a, b, 0,
            concat(a->dom, b->dom), concat(a->cod, b->cod)};
  return finish(std::move(e));
}

ExprPtr etrace(int k, ExprPtr x) {
  require(k >= 0 && k <= static_cast<int>(x->dom.size()) &&
              k <= static_cast<int>(x->cod.size()) &&
              prefix(x->dom, k) == prefix(x->cod, k),
          Errc::prefix_mismatch, "expression feedback prefix must agree");
  MorExpr e{MorExpr::Kind::trace, {}, {}, {}, x, nullptr, k,
            suffix(x->dom, k), suffix(x->cod, k)};
  return finish(std::move(e));
}

Rendered render_to_cob(const ExprPtr& e) {
  switch (e->kind) {
    case MorExpr::Kind::box: {
      SignedSet shape = minus_plus_shape(e->dom, e->cod);
      return Rendered{identity(shape), {{e->box_name, shape}}};
    }
    case MorExpr::Kind::identity:
      return Rendered{name_of_identity(e->w1), {}};
    case MorExpr::Kind::symmetry:
      return Rendered{name_of_symmetry(e->w1, e->w2), {}};
    case MorExpr::Kind::compose: {
      Rendered a = render_to_cob(e->lhs);
      Rendered b = render_to_cob(e->rhs);
      Cobordism body =
          compose(tensor(a.body, b.body),
                  gamma_compose(e->lhs->dom, e->lhs->cod, e->rhs->cod));
      a.boxes.insert(a.boxes.end(), b.boxes.begin(), b.boxes.end());
      return Rendered{std::move(body), std::move(a.boxes)};
    }
    case MorExpr::Kind::tensor: {
      Rendered a = render_to_cob(e->lhs);
      Rendered b = render_to_cob(e->rhs);
      Cobordism body =
          compose(tensor(a.body, b.body),
                  gamma_tensor(e->lhs->dom, e->lhs->cod, e->rhs->dom,
                               e->rhs->cod));
      a.boxes.insert(a.boxes.end(), b.boxes.begin(), b.boxes.end());
      return Rendered{std::move(body), std::move(a.boxes)};
    }
    case MorExpr::Kind::trace: {
      Rendered a = render_to_cob(e->lhs);
      Word u = prefix(e->lhs->dom, e->k);
      Cobordism body = compose(a.body, gamma_trace(u, e->dom, e->cod));
      return Rendered{std::move(body), std::move(a.boxes)};
    }
  }
  fail(Errc::internal, "unreachable expression kind");
}

bool cob_sides_equal(const ExprPtr& lhs, const ExprPtr& rhs) {
  Rendered a = render_to_cob(lhs);
  Rendered b = render_to_cob(rhs);
  if (a.boxes.size() != b.boxes.size()) return false;
  if (a.boxes == b.boxes) return a.body == b.body;

  // Align box orders: route each box block of the a-layout to its position
  // in the b-layout, then compare.
  SignedSet a_all;
  std::vector<int> a_offset;  // 0-based start of each a box in a_all
  for (const auto& [name, shape] : a.boxes) {
    a_offset.push_back(a_all.size());
    a_all = concat(a_all, shape);
  }
  std::vector<int> b_offset;
  SignedSet b_all;
  for (const auto& [name, shape] : b.boxes) {
    b_offset.push_back(b_all.size());
    b_all = concat(b_all, shape);
  }
  std::vector<int> tgt(static_cast<size_t>(a_all.size()), -1);
  std::vector<char> used(b.boxes.size(), 0);
  for (size_t i = 0; i < a.boxes.size(); ++i) {
    size_t j = 0;
    for (; j < b.boxes.size(); ++j)
      if (!used[j] && b.boxes[j] == a.boxes[i]) break;
    if (j == b.boxes.size()) return false;  // different box multisets
    used[j] = 1;
    for (int p = 0; p < a.boxes[i].second.size(); ++p)
      tgt[static_cast<size_t>(a_offset[i] + p)] = b_offset[j] + p;
  }
  Cobordism shuffle = permutation(a_all, tgt);
  return compose(shuffle, b.body) == a.body;
}

Mor eval_expr(const TracedInstance& t, const ExprPtr& e,
              const std::map<std::string, Mor>& env) {
  switch (e->kind) {
    case MorExpr::Kind::box: {
      auto it = env.find(e->box_name);
      require(it != env.end(), Errc::unknown_label,
              "no filling for box " + e->box_name);
      require(it->second.dom == e->dom && it->second.cod == e->cod,
              Errc::type_mismatch, "box filling has the wrong boundary");
      return it->second;
    }
    case MorExpr::Kind::identity:
      return t.identity_mor(e->w1);
    case MorExpr::Kind::symmetry:
      return t.symmetry_mor(e->w1, e->w2);
    case MorExpr::Kind::compose:
      return t.compose(eval_expr(t, e->lhs, env), eval_expr(t, e->rhs, env));
    case MorExpr::Kind::tensor:
      return t.tensor_mor(eval_expr(t, e->lhs, env),
                          eval_expr(t, e->rhs, env));
    case MorExpr::Kind::trace:
      return t.trace(e->k, eval_expr(t, e->lhs, env));
  }
  fail(Errc::internal, "unreachable expression kind");
}

const std::vector<std::string>& traced_law_names() {
  static const std::vector<std::string> names = {
      "left naturality",  "right naturality", "sliding",
      "vanishing unit",   "vanishing tensor", "superposition",
      "yanking"};
  return names;
}

std::vector<LawCase> sample_law_cases(Rng& r, const std::vector<Label>& labels,
                                      int max_len) {
  auto rw = [&](void) { return random_word(r, labels, max_len); };
  auto klen = [](const Word& w) { return static_cast<int>(w.size()); };
  auto show = [](std::initializer_list<std::pair<const char*, const Word*>>
                     ws) {
    std::string s;
    for (const auto& [n, w] : ws) {
      if (!s.empty()) s += ", ";
      s += std::string(n) + "=" + to_string(*w);
    }
    return s;
  };
  std::vector<LawCase> out;

  {  // left naturality: pre-composing under the feedback prefix commutes.
    Word u = rw(), x = rw(), y = rw(), x0 = rw();
    ExprPtr g = ebox("g", x0, x);
    ExprPtr f = ebox("f", concat(u, x), concat(u, y));
    LawCase lc{"left naturality",
               etrace(klen(u), ecomp(etens(eid(u), g), f)),
               ecomp(g, etrace(klen(u), f)),
               {{"g", x0, x}, {"f", concat(u, x), concat(u, y)}},
               show({{"U", &u}, {"X", &x}, {"Y", &y}, {"X'", &x0}})};
    out.push_back(std::move(lc));
  }
  {  // right naturality: post-composing outside the feedback commutes.
    Word u = rw(), x = rw(), y = rw(), y0 = rw();
    ExprPtr f = ebox("f", concat(u, x), concat(u, y));
    ExprPtr h = ebox("h", y, y0);
    LawCase lc{"right naturality",
               etrace(klen(u), ecomp(f, etens(eid(u), h))),
               ecomp(etrace(klen(u), f), h),
               {{"f", concat(u, x), concat(u, y)}, {"h", y, y0}},
               show({{"U", &u}, {"X", &x}, {"Y", &y}, {"Y'", &y0}})};
    out.push_back(std::move(lc));
  }
  {  // sliding: a box may slide around the feedback wire.
    Word u = rw(), v = rw(), x = rw(), y = rw();
    ExprPtr f = ebox("f", concat(u, x), concat(v, y));
    ExprPtr g = ebox("g", v, u);
    LawCase lc{"sliding",
               etrace(klen(u), ecomp(f, etens(g, eid(y)))),
               etrace(klen(v), ecomp(etens(g, eid(x)), f)),
               {{"f", concat(u, x), concat(v, y)}, {"g", v, u}},
               show({{"U", &u}, {"V", &v}, {"X", &x}, {"Y", &y}})};
    out.push_back(std::move(lc));
  }
  {  // vanishing unit: feedback over the empty prefix is the identity.
    Word x = rw(), y = rw();
    ExprPtr f = ebox("f", x, y);
    LawCase lc{"vanishing unit",
               etrace(0, f),
               f,
               {{"f", x, y}},
               show({{"X", &x}, {"Y", &y}})};
    out.push_back(std::move(lc));
  }
  {  // vanishing tensor: feedback over a concatenation is iterated feedback.
    Word u = rw(), v = rw(), x = rw(), y = rw();
    Word uv = concat(u, v);
    ExprPtr f = ebox("f", concat(uv, x), concat(uv, y));
    LawCase lc{"vanishing tensor",
               etrace(klen(uv), f),
               etrace(klen(v), etrace(klen(u), f)),
               {{"f", concat(uv, x), concat(uv, y)}},
               show({{"U", &u}, {"V", &v}, {"X", &x}, {"Y", &y}})};
    out.push_back(std::move(lc));
  }
  {  // superposition: a spectator box passes in and out of the feedback.
    Word u = rw(), x = rw(), y = rw(), w = rw(), z = rw();
    ExprPtr f = ebox("f", concat(u, x), concat(u, y));
    ExprPtr g = ebox("g", w, z);
    LawCase lc{"superposition",
               etens(etrace(klen(u), f), g),
               etrace(klen(u), etens(f, g)),
               {{"f", concat(u, x), concat(u, y)}, {"g", w, z}},
               show({{"U", &u}, {"X", &x}, {"Y", &y}, {"W", &w}, {"Z", &z}})};
    out.push_back(std::move(lc));
  }
  {  // yanking: feeding a crossing back is a straight wire.
    Word u = rw();
    LawCase lc{"yanking",
               etrace(klen(u), esym(u, u)),
               eid(u),
               {},
               show({{"U", &u}})};
    out.push_back(std::move(lc));
  }
  return out;
}

bool LawCheckReport::all_passed() const {
  for (const auto& e : entries)
    if (!e.passed()) return false;
  return true;
}

std::string LawCheckReport::summary() const {
  std::string s;
  for (const auto& e : entries) {
    s += e.passed() ? "PASS " : "FAIL ";
    s += e.law + " (" + std::to_string(e.cases) + " cases";
    if (e.cob_failures)
      s += ", " + std::to_string(e.cob_failures) + " diagram failures";
    if (e.instance_failures)
      s += ", " + std::to_string(e.instance_failures) + " instance failures";
    if (!e.passed() && !e.first_witness.empty())
      s += "; first witness: " + e.first_witness;
    s += ")\n";
  }
  return s;
}

LawCheckReport check_traced_axioms(const TracedInstance* t, int cases,
                                   std::uint64_t seed,
                                   const std::vector<Label>& labels,
                                   int max_len, bool check_cob) {
  LawCheckReport report;
  for (const auto& n : traced_law_names())
    report.entries.push_back(LawCheckEntry{n, 0, 0, 0, {}});
  Rng r(seed);
  for (int i = 0; i < cases; ++i) {
    std::vector<LawCase> lcs = sample_law_cases(r, labels, max_len);
    for (size_t li = 0; li < lcs.size(); ++li) {
      const LawCase& lc = lcs[li];
      LawCheckEntry& entry = report.entries[li];
      ++entry.cases;
      bool bad = false;
      if (check_cob && !cob_sides_equal(lc.lhs, lc.rhs)) {
        ++entry.cob_failures;
        bad = true;
      }
      if (t != nullptr) {
        std::map<std::string, Mor> env;
        for (const auto& b : lc.boxes)
          env.emplace(b.name, t->sample(r, b.dom, b.cod));
        Mor lv = eval_expr(*t, lc.lhs, env);
        Mor rv = eval_expr(*t, lc.rhs, env);
        if (!t->equal(lv, rv)) {
          ++entry.instance_failures;
          bad = true;
        }
      }
      if (bad && entry.first_witness.empty()) entry.first_witness = lc.shapes;
    }
  }
  return report;
}

}  // namespace cobcat
