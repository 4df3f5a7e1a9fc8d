#include "cobcat/traced.hpp"

#include "cobcat/error.hpp"

namespace cobcat {

Mor TracedInstance::symmetry_mor(const Word& x, const Word& y) const {
  int nx = static_cast<int>(x.size()), ny = static_cast<int>(y.size());
  std::vector<int> tgt;
  tgt.reserve(static_cast<size_t>(nx + ny));
  for (int i = 0; i < nx; ++i) tgt.push_back(ny + i);
  for (int j = 0; j < ny; ++j) tgt.push_back(j);
  return permutation_mor(concat(x, y), tgt);
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> inv(p.size(), -1);
  for (size_t i = 0; i < p.size(); ++i) {
    int t = p[i];
    require(t >= 0 && t < static_cast<int>(p.size()) &&
                inv[static_cast<size_t>(t)] == -1,
            Errc::index_out_of_range, "not a permutation");
    inv[static_cast<size_t>(t)] = static_cast<int>(i);
  }
  return inv;
}

Word permute_word(const Word& w, const std::vector<int>& tgt) {
  require(tgt.size() == w.size(), Errc::index_out_of_range,
          "permutation length mismatch");
  Word out(w.size());
  std::vector<char> used(w.size(), 0);
  for (size_t i = 0; i < w.size(); ++i) {
    int t = tgt[i];
    require(t >= 0 && t < static_cast<int>(w.size()) &&
                !used[static_cast<size_t>(t)],
            Errc::index_out_of_range, "not a permutation");
    used[static_cast<size_t>(t)] = 1;
    out[static_cast<size_t>(t)] = w[i];
  }
  return out;
}

}  // namespace cobcat
