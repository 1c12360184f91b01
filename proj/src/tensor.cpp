#include "pdalg/tensor.hpp"

#include "pdalg/errors.hpp"

namespace pdalg {

Tensor::Tensor(std::size_t dim, std::vector<IndexSlot> signature) : dim_(dim), sig_(std::move(signature)) {
  std::size_t n = 1;
  for (std::size_t k = 0; k < sig_.size(); ++k) n *= dim_;
  data_.assign(n, RatExpr());
}

std::size_t Tensor::flat(const Index& idx) const {
  if (idx.size() != sig_.size()) throw DomainError("tensor index has wrong rank");
  std::size_t k = 0;
  for (std::size_t s = 0; s < idx.size(); ++s) {
    if (idx[s] >= dim_) throw DomainError("tensor index out of range");
    k = k * dim_ + idx[s];
  }
  return k;
}

Tensor::Index Tensor::index_of(std::size_t k) const {
  Index idx(sig_.size());
  for (std::size_t s = sig_.size(); s > 0; --s) {
    idx[s - 1] = k % dim_;
    k /= dim_;
  }
  return idx;
}

bool Tensor::is_zero() const {
  for (const auto& c : data_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<Tensor::Index> Tensor::first_nonzero() const {
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!data_[k].is_zero()) return index_of(k);
  return std::nullopt;
}

Tensor Tensor::operator-() const {
  Tensor out = *this;
  for (auto& c : out.data_) c = -c;
  return out;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (dim_ != o.dim_ || !(sig_ == o.sig_)) throw DomainError("tensor signature mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (dim_ != o.dim_ || !(sig_ == o.sig_)) throw DomainError("tensor signature mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Tensor Tensor::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != rank()) throw DomainError("permutation has wrong rank");
  std::vector<IndexSlot> sig;
  for (std::size_t p : perm) sig.push_back(sig_.at(p));
  Tensor out(dim_, sig);
  for_each_index(dim_, rank(), [&](const Index& idx) {
    Index src(rank());
    for (std::size_t k = 0; k < perm.size(); ++k) src[perm[k]] = idx[k];
    out(idx) = (*this)(src);
  });
  return out;
}

std::string Tensor::signature_string() const {
  std::string out;
  for (const auto& s : sig_) {
    out += s.variance == Variance::up ? '^' : '_';
    out += s.basis == Basis::coordinate ? 'c' : 'f';
  }
  return out;
}

Metric::Metric(ExprMatrix lower) : lower_(std::move(lower)) {
  if (!lower_.is_square()) throw DomainError("metric must be square");
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = a + 1; b < dim(); ++b)
      if (!(lower_(a, b) == lower_(b, a))) throw DomainError("metric is not symmetric");
  auto inv = lower_.inverse();
  if (!inv) throw DomainError("metric is singular");
  upper_ = std::move(*inv);
}

Tensor Metric::tensor() const { return matrix_tensor(lower_, down(), down()); }

Tensor matrix_tensor(const ExprMatrix& m, IndexSlot first, IndexSlot second) {
  if (!m.is_square()) throw DomainError("matrix must be square");
  Tensor t(m.rows(), {first, second});
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b) t({a, b}) = m(a, b);
  return t;
}

}  // namespace pdalg
