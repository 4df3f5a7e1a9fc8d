#pragma once

#include <map>
#include <utility>

#include "cobcat/error.hpp"
#include "cobcat/matrix.hpp"
#include "cobcat/semiring.hpp"
#include "cobcat/traced.hpp"

namespace cobcat {

/// Matrices over a semiring as a word-indexed instance: hom(w,v) is the
/// set of (dim v)×(dim w) matrices, dims multiply along words, feedback is
/// partial trace. Also carries the bent-wire structure (dual/eta/eps),
/// with the dual of a word being its reversal.
template <typename S>
class MatrixInstance final : public TracedInstance {
 public:
  explicit MatrixInstance(std::map<Label, int> dims) : dims_(std::move(dims)) {
    for (const auto& [l, d] : dims_)
      require(d >= 1, Errc::index_out_of_range,
              "dimension of " + l + " must be positive");
  }

  const std::map<Label, int>& dims() const { return dims_; }

  int dim(const Label& l) const {
    auto it = dims_.find(l);
    require(it != dims_.end(), Errc::unknown_label,
            "no dimension assigned to label " + l);
    return it->second;
  }

  std::vector<int> word_dims(const Word& w) const {
    std::vector<int> d;
    d.reserve(w.size());
    for (const Label& l : w) d.push_back(dim(l));
    return d;
  }

  long long dim_of(const Word& w) const { return total_dim(word_dims(w)); }

  Mor make_mor(Matrix<S> m, Word dom, Word cod) const {
    require(m.rows == dim_of(cod) && m.cols == dim_of(dom),
            Errc::type_mismatch, "matrix shape does not fit the words");
    return Mor{std::move(m), std::move(dom), std::move(cod)};
  }

  const Matrix<S>& mat(const Mor& f) const {
    const Matrix<S>* p = std::any_cast<Matrix<S>>(&f.payload);
    require(p != nullptr, Errc::type_mismatch,
            "payload is not a matrix of this instance");
    return *p;
  }

  std::string describe() const override {
    return std::string("matrix/") + S::name();
  }

  Mor identity_mor(const Word& w) const override {
    return Mor{identity_matrix<S>(dim_of(w)), w, w};
  }

  Mor compose(const Mor& f, const Mor& g) const override {
    require(f.cod == g.dom, Errc::type_mismatch,
            "composition boundary mismatch");
    return Mor{matmul(mat(g), mat(f)), f.dom, g.cod};
  }

  Mor tensor_mor(const Mor& f, const Mor& g) const override {
    return Mor{kron(mat(f), mat(g)), concat(f.dom, g.dom),
               concat(f.cod, g.cod)};
  }

  Mor trace(int k, const Mor& f) const override {
    require(k >= 0 && k <= static_cast<int>(f.dom.size()) &&
                k <= static_cast<int>(f.cod.size()),
            Errc::prefix_mismatch, "feedback prefix longer than a boundary");
    for (int i = 0; i < k; ++i)
      require(f.dom[static_cast<size_t>(i)] == f.cod[static_cast<size_t>(i)],
              Errc::prefix_mismatch, "feedback prefix must agree");
    Word u(f.dom.begin(), f.dom.begin() + k);
    Word x(f.dom.begin() + k, f.dom.end());
    Word y(f.cod.begin() + k, f.cod.end());
    return Mor{partial_trace_leading(mat(f), dim_of(u), dim_of(x), dim_of(y)),
               std::move(x), std::move(y)};
  }

  Mor permutation_mor(const Word& w,
                      const std::vector<int>& tgt) const override {
    Word out = permute_word(w, tgt);
    std::vector<int> dw = word_dims(w), dout = word_dims(out);
    Matrix<S> m(total_dim(dout), total_dim(dw));
    std::vector<int> x(w.size(), 0);
    do {
      std::vector<int> y(w.size(), 0);
      for (size_t i = 0; i < w.size(); ++i)
        y[static_cast<size_t>(tgt[i])] = x[i];
      m.set(flat_index(dout, y), flat_index(dw, x), S::one());
    } while (next_digits(dw, x));
    return Mor{std::move(m), w, std::move(out)};
  }

  bool equal(const Mor& f, const Mor& g) const override {
    return f.dom == g.dom && f.cod == g.cod && matrix_equal(mat(f), mat(g));
  }

  Mor sample(Rng& r, const Word& dom, const Word& cod) const override {
    Matrix<S> m(dim_of(cod), dim_of(dom));
    for (long long i = 0; i < m.rows; ++i)
      for (long long j = 0; j < m.cols; ++j)
        m.set(i, j, S::from_int(r.below(3)));
    return Mor{std::move(m), dom, cod};
  }

  Word dual_word(const Word& w) const { return reversed(w); }

  /// Bent-up wires: the column vector in hom(ε, w̄·w) pairing position k
  /// with position 2n+1-k.
  Mor eta(const Word& w) const {
    size_t n = w.size();
    Word cod = concat(reversed(w), w);
    std::vector<int> dw = word_dims(w), dc = word_dims(cod);
    Matrix<S> m(total_dim(dc), 1);
    std::vector<int> x(n, 0);
    do {
      std::vector<int> y(2 * n, 0);
      for (size_t p = 0; p < n; ++p) {
        y[p] = x[n - 1 - p];
        y[n + p] = x[p];
      }
      m.set(flat_index(dc, y), 0, S::one());
    } while (next_digits(dw, x));
    return Mor{std::move(m), Word{}, std::move(cod)};
  }

  /// Bent-down wires: the row vector in hom(w·w̄, ε).
  Mor eps(const Word& w) const {
    size_t n = w.size();
    Word dom = concat(w, reversed(w));
    std::vector<int> dw = word_dims(w), dd = word_dims(dom);
    Matrix<S> m(1, total_dim(dd));
    std::vector<int> x(n, 0);
    do {
      std::vector<int> y(2 * n, 0);
      for (size_t p = 0; p < n; ++p) {
        y[p] = x[p];
        y[n + p] = x[n - 1 - p];
      }
      m.set(0, flat_index(dd, y), S::one());
    } while (next_digits(dw, x));
    return Mor{std::move(m), std::move(dom), Word{}};
  }

 private:
  std::map<Label, int> dims_;
};

}  // namespace cobcat
