#include "netaug/certificate.hpp"

#include <stdexcept>

namespace netaug {

ForestStack::ForestStack(std::size_t n, std::size_t k) : n_(n) {
  if (k < 1) throw std::invalid_argument("certificate needs k >= 1");
  uf_.assign(k, UnionFind(n));
  forests_.resize(k);
}

bool ForestStack::insert(const WeightedEdge& e) {
  check_endpoints(e, n_);
  for (std::size_t i = 0; i < uf_.size(); ++i) {
    if (uf_[i].unite(e.u, e.v)) {
      forests_[i].push_back(e);
      ++stored_;
      return true;
    }
  }
  return false;
}

std::vector<WeightedEdge> ForestStack::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(stored_);
  for (const auto& f : forests_) out.insert(out.end(), f.begin(), f.end());
  return out;
}

}  // namespace netaug
