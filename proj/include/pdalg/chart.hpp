#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pdalg {

enum class ChartKind { real, complex };

/// Ordered coordinate names of one local chart. A complex chart carries a
/// fixed-point-free involution pairing every holomorphic coordinate z^i with
/// its conjugate z^ī.
class Chart {
 public:
  Chart() = default;
  /// Real chart. Throws DomainError on duplicate or invalid names.
  explicit Chart(std::vector<std::string> coords);
  /// Complex chart; `pairing` maps each holomorphic name to its conjugate.
  Chart(std::vector<std::string> coords, const std::map<std::string, std::string>& pairing);

  static Chart real(std::vector<std::string> coords) { return Chart(std::move(coords)); }
  static Chart complex(std::vector<std::string> coords, const std::map<std::string, std::string>& pairing) {
    return Chart(std::move(coords), pairing);
  }

  std::size_t dim() const { return names_.size(); }
  ChartKind kind() const { return kind_; }
  bool is_complex() const { return kind_ == ChartKind::complex; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws DomainError for an unknown name.
  std::size_t index_of(const std::string& name) const;

  /// Conjugate coordinate index (identity on real charts).
  std::size_t conj(std::size_t i) const { return conj_.at(i); }
  const std::vector<std::size_t>& conj_permutation() const { return conj_; }
  /// True for holomorphic coordinates; every coordinate of a real chart counts as holomorphic.
  bool is_holomorphic(std::size_t i) const { return holo_.at(i); }
  /// Holomorphic-name -> conjugate-name map (empty for real charts).
  std::map<std::string, std::string> pairing() const;

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.names_ == b.names_ && a.kind_ == b.kind_ && a.conj_ == b.conj_ && a.holo_ == b.holo_;
  }

 private:
  std::vector<std::string> names_;
  ChartKind kind_ = ChartKind::real;
  std::vector<std::size_t> conj_;
  std::vector<bool> holo_;
};

/// Throws DomainError unless both charts are equal.
void require_same_chart(const Chart& a, const Chart& b);

}  // namespace pdalg
