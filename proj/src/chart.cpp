#include "pdalg/chart.hpp"

#include <cctype>
#include <set>

#include "pdalg/errors.hpp"
#include "pdalg/polynomial.hpp"

namespace pdalg {

namespace {

void validate_names(const std::vector<std::string>& names) {
  if (names.size() > kMaxVars) throw DomainError("chart has more than " + std::to_string(kMaxVars) + " coordinates");
  std::set<std::string> seen;
  for (const auto& n : names) {
    bool ok = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
    for (char ch : n) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
    if (!ok) throw DomainError("invalid coordinate name '" + n + "'");
    if (n == "i" || n == "d") throw DomainError("coordinate name '" + n + "' is reserved");
    if (!seen.insert(n).second) throw DomainError("duplicate coordinate name '" + n + "'");
  }
}

}  // namespace

Chart::Chart(std::vector<std::string> coords) : names_(std::move(coords)) {
  validate_names(names_);
  conj_.resize(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) conj_[i] = i;
  holo_.assign(names_.size(), true);
}

Chart::Chart(std::vector<std::string> coords, const std::map<std::string, std::string>& pairing)
    : names_(std::move(coords)), kind_(ChartKind::complex) {
  validate_names(names_);
  const std::size_t n = names_.size();
  conj_.assign(n, n);
  holo_.assign(n, false);
  for (const auto& [z, zb] : pairing) {
    std::size_t a = index_of(z), b = index_of(zb);
    if (a == b) throw DomainError("pairing maps '" + z + "' to itself");
    if (conj_[a] != n || conj_[b] != n) throw DomainError("coordinate paired twice in '" + z + "' <-> '" + zb + "'");
    conj_[a] = b;
    conj_[b] = a;
    holo_[a] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (conj_[i] == n) throw DomainError("coordinate '" + names_[i] + "' has no conjugate");
}

std::optional<std::size_t> Chart::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Chart::index_of(const std::string& name) const {
  auto i = find(name);
  if (!i) throw DomainError("unknown coordinate '" + name + "'");
  return *i;
}

std::map<std::string, std::string> Chart::pairing() const {
  std::map<std::string, std::string> out;
  if (!is_complex()) return out;
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (holo_[i]) out[names_[i]] = names_[conj_[i]];
  return out;
}

void require_same_chart(const Chart& a, const Chart& b) {
  if (!(a == b)) throw DomainError("chart mismatch");
}

}  // namespace pdalg
