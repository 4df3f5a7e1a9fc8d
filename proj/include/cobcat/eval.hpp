#pragma once

#include <map>
#include <vector>

#include "cobcat/cobordism.hpp"
#include "cobcat/error.hpp"
#include "cobcat/matrix.hpp"
#include "cobcat/traced.hpp"

namespace cobcat {

/// Interprets a cobordism in a word-indexed instance by splitting it into
/// pass-through, feedback, bent-wire and loop parts: conjugate by the
/// boundary shuffles, close the feedback prefix, juxtapose the untouched
/// bent wires, and multiply in one closed-loop scalar per loop.
/// f must live in hom(inp dom, outp dom); the result lives in
/// hom(inp cod, outp cod).
Mor action(const TracedInstance& t, const Cobordism& phi, const Mor& f);

namespace detail_eval {

inline int checked_dim(const std::map<Label, int>& dims, const Label& l) {
  auto it = dims.find(l);
  require(it != dims.end(), Errc::unknown_label,
          "no dimension assigned to label " + l);
  require(it->second >= 1, Errc::index_out_of_range,
          "dimension of " + l + " must be positive");
  return it->second;
}

inline std::vector<int> boundary_dims(const std::map<Label, int>& dims,
                                      const SignedSet& x) {
  std::vector<int> d;
  d.reserve(x.points.size());
  for (const auto& p : x.points) d.push_back(checked_dim(dims, p.label));
  return d;
}

template <typename S>
typename S::value_type loop_scalar(const Cobordism& c,
                                   const std::map<Label, int>& dims) {
  typename S::value_type s = S::one();
  for (const auto& [l, k] : c.loops)
    for (std::int64_t i = 0; i < k; ++i)
      s = S::mul(s, S::from_int(checked_dim(dims, l)));
  return s;
}

}  // namespace detail_eval

/// Independent evaluation by direct tensor contraction: every arc is a
/// Kronecker delta between its endpoints' indices, every loop a dimension
/// scalar. Result indexed by the full cod word (rows) and dom word (cols).
/// Enumerates one free index per arc, so runtime is ∏ dims over arcs.
template <typename S>
Matrix<S> matrix_eval_oracle(const Cobordism& c,
                             const std::map<Label, int>& dims) {
  using namespace detail_eval;
  std::vector<int> ddom = boundary_dims(dims, c.dom);
  std::vector<int> dcod = boundary_dims(dims, c.cod);
  Matrix<S> m(total_dim(dcod), total_dim(ddom));
  typename S::value_type scal = loop_scalar<S>(c, dims);

  std::vector<int> adims;
  adims.reserve(c.arcs.size());
  for (const Arc& a : c.arcs)
    adims.push_back(checked_dim(dims, c.at(a.a).label));
  std::vector<int> asg(c.arcs.size(), 0);
  do {
    std::vector<int> xd(c.dom.points.size(), 0);
    std::vector<int> yd(c.cod.points.size(), 0);
    auto put = [&](Endpoint e, int v) {
      auto& digits = e.side == Side::dom ? xd : yd;
      digits[static_cast<size_t>(e.pos - 1)] = v;
    };
    for (size_t j = 0; j < c.arcs.size(); ++j) {
      put(c.arcs[j].a, asg[j]);
      put(c.arcs[j].b, asg[j]);
    }
    m.set(flat_index(dcod, yd), flat_index(ddom, xd), scal);
  } while (next_digits(adims, asg));
  return m;
}

/// The map on box fillings induced by the contraction semantics: the box
/// matrix f (outp dom × inp dom) is contracted against the deltas of phi,
/// giving an outp cod × inp cod matrix. Same free-index-per-arc
/// enumeration as matrix_eval_oracle; independent of action().
template <typename S>
Matrix<S> oracle_apply(const Cobordism& phi, const Matrix<S>& f,
                       const std::map<Label, int>& dims) {
  using namespace detail_eval;
  std::vector<int> in_dom, out_dom, in_cod, out_cod;  // 0-based positions
  std::vector<int> din_dom, dout_dom, din_cod, dout_cod;
  for (size_t i = 0; i < phi.dom.points.size(); ++i) {
    const auto& p = phi.dom.points[i];
    auto& pos = p.sign == Sign::minus ? in_dom : out_dom;
    auto& dis = p.sign == Sign::minus ? din_dom : dout_dom;
    pos.push_back(static_cast<int>(i));
    dis.push_back(checked_dim(dims, p.label));
  }
  for (size_t i = 0; i < phi.cod.points.size(); ++i) {
    const auto& p = phi.cod.points[i];
    auto& pos = p.sign == Sign::minus ? in_cod : out_cod;
    auto& dis = p.sign == Sign::minus ? din_cod : dout_cod;
    pos.push_back(static_cast<int>(i));
    dis.push_back(checked_dim(dims, p.label));
  }
  require(f.rows == total_dim(dout_dom) && f.cols == total_dim(din_dom),
          Errc::type_mismatch, "box matrix does not fit the dom boundary");
  Matrix<S> g(total_dim(dout_cod), total_dim(din_cod));
  typename S::value_type scal = loop_scalar<S>(phi, dims);

  std::vector<int> adims;
  adims.reserve(phi.arcs.size());
  for (const Arc& a : phi.arcs)
    adims.push_back(checked_dim(dims, phi.at(a.a).label));
  std::vector<int> asg(phi.arcs.size(), 0);
  do {
    std::vector<int> xd(phi.dom.points.size(), 0);
    std::vector<int> yd(phi.cod.points.size(), 0);
    auto put = [&](Endpoint e, int v) {
      auto& digits = e.side == Side::dom ? xd : yd;
      digits[static_cast<size_t>(e.pos - 1)] = v;
    };
    for (size_t j = 0; j < phi.arcs.size(); ++j) {
      put(phi.arcs[j].a, asg[j]);
      put(phi.arcs[j].b, asg[j]);
    }
    auto pick = [](const std::vector<int>& all, const std::vector<int>& pos) {
      std::vector<int> out;
      out.reserve(pos.size());
      for (int p : pos) out.push_back(all[static_cast<size_t>(p)]);
      return out;
    };
    const auto fv = f.at(flat_index(dout_dom, pick(xd, out_dom)),
                         flat_index(din_dom, pick(xd, in_dom)));
    if (S::is_zero(fv)) continue;
    g.add_to(flat_index(dout_cod, pick(yd, out_cod)),
             flat_index(din_cod, pick(yd, in_cod)), S::mul(scal, fv));
  } while (next_digits(adims, asg));
  return g;
}

}  // namespace cobcat
