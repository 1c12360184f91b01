#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pdalg/matrix.hpp"
#include "pdalg/ratexpr.hpp"

namespace pdalg {

enum class Variance { up, down };
enum class Basis { coordinate, frame };

struct IndexSlot {
  Variance variance;
  Basis basis = Basis::coordinate;
  friend bool operator==(const IndexSlot& a, const IndexSlot& b) {
    return a.variance == b.variance && a.basis == b.basis;
  }
};

inline IndexSlot up(Basis b = Basis::coordinate) { return {Variance::up, b}; }
inline IndexSlot down(Basis b = Basis::coordinate) { return {Variance::down, b}; }

/// Dense tensor of RatExpr components. Every slot ranges over 0..dim-1 and
/// records whether it is upper or lower and which basis it refers to.
class Tensor {
 public:
  using Index = std::vector<std::size_t>;

  Tensor() = default;
  Tensor(std::size_t dim, std::vector<IndexSlot> signature);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return sig_.size(); }
  const std::vector<IndexSlot>& signature() const { return sig_; }
  std::size_t size() const { return data_.size(); }

  RatExpr& operator()(const Index& idx) { return data_[flat(idx)]; }
  const RatExpr& operator()(const Index& idx) const { return data_[flat(idx)]; }
  RatExpr& flat_at(std::size_t k) { return data_[k]; }
  const RatExpr& flat_at(std::size_t k) const { return data_[k]; }
  /// Multi-index of flat position k (last slot fastest).
  Index index_of(std::size_t k) const;

  bool is_zero() const;
  /// First nonzero component, if any.
  std::optional<Index> first_nonzero() const;

  Tensor operator-() const;
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dim_ == b.dim_ && a.sig_ == b.sig_ && a.data_ == b.data_;
  }

  /// Copy with slots permuted: out(i_{perm[0]}, ...) ordering means slot k of
  /// the result is slot perm[k] of this tensor.
  Tensor permuted(const std::vector<std::size_t>& perm) const;

  /// Text signature such as "^c_c_c" (c = coordinate, f = frame).
  std::string signature_string() const;

 private:
  std::size_t flat(const Index& idx) const;

  std::size_t dim_ = 0;
  std::vector<IndexSlot> sig_;
  std::vector<RatExpr> data_;
};

/// Calls fn(index) for every multi-index of the given rank over 0..dim-1.
template <class Fn>
void for_each_index(std::size_t dim, std::size_t rank, Fn&& fn) {
  Tensor::Index idx(rank, 0);
  if (dim == 0 && rank > 0) return;
  while (true) {
    fn(static_cast<const Tensor::Index&>(idx));
    std::size_t s = rank;
    while (s > 0) {
      if (++idx[s - 1] < dim) break;
      idx[s - 1] = 0;
      --s;
    }
    if (s == 0) return;
  }
}

/// Symmetric covariant metric h_{ab} with its inverse h^{ab}.
class Metric {
 public:
  /// Throws DomainError when h is not symmetric or is singular.
  explicit Metric(ExprMatrix lower);

  std::size_t dim() const { return lower_.rows(); }
  const ExprMatrix& lower() const { return lower_; }
  const ExprMatrix& upper() const { return upper_; }
  /// h_{ab} as a (down, down) tensor.
  Tensor tensor() const;

 private:
  ExprMatrix lower_;
  ExprMatrix upper_;
};

/// A matrix as a rank-2 tensor with the given slots.
Tensor matrix_tensor(const ExprMatrix& m, IndexSlot first, IndexSlot second);

}  // namespace pdalg
