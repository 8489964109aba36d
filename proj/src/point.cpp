#include "ignatiev/point.hpp"

#include <algorithm>

#include "parse_util.hpp"

namespace ign {

std::optional<std::size_t> chain_violation(const std::vector<Ordinal>& coords) {
  for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
    if (cmp(coords[i + 1], ell(coords[i])) == std::strong_ordering::greater) return i;
  }
  return std::nullopt;
}

IgnatievPoint IgnatievPoint::make(std::vector<Ordinal> coords) {
  while (!coords.empty() && coords.back().is_zero()) coords.pop_back();
  if (auto bad = chain_violation(coords)) throw ChainViolation(*bad);
  IgnatievPoint p;
  p.coords_ = std::move(coords);
  return p;
}

const Ordinal& IgnatievPoint::coordinate(std::size_t i) const {
  static const Ordinal zero;
  return i < coords_.size() ? coords_[i] : zero;
}

bool leq(const IgnatievPoint& p, const IgnatievPoint& q) {
  std::size_t n = std::max(p.support(), q.support());
  for (std::size_t i = 0; i < n; ++i) {
    if (cmp(p.coordinate(i), q.coordinate(i)) == std::strong_ordering::less) return false;
  }
  return true;
}

IgnatievPoint glb(const IgnatievPoint& p, const IgnatievPoint& q) {
  std::size_t n = std::max(p.support(), q.support());
  std::vector<Ordinal> delta(n);
  Ordinal below;  // delta[i+1], zero beyond the joint support
  for (std::size_t i = n; i-- > 0;) {
    const Ordinal& pi = p.coordinate(i);
    const Ordinal& qi = q.coordinate(i);
    const Ordinal& gamma = cmp(pi, qi) == std::strong_ordering::less ? qi : pi;
    if (cmp(ell(gamma), below) != std::strong_ordering::less)
      delta[i] = gamma;
    else
      delta[i] = add(gamma, omega_pow(below));
    below = delta[i];
  }
  return IgnatievPoint::make(std::move(delta));
}

IgnatievPoint diamond(unsigned n, const IgnatievPoint& p) {
  std::vector<Ordinal> delta(static_cast<std::size_t>(n) + 1);
  Ordinal below;
  for (std::size_t i = static_cast<std::size_t>(n) + 1; i-- > 0;) {
    delta[i] = add(p.coordinate(i), omega_pow(below));
    below = delta[i];
  }
  return IgnatievPoint::make(std::move(delta));
}

IgnatievPoint nabla(unsigned n, const IgnatievPoint& p) {
  std::size_t keep = std::min<std::size_t>(p.support(), static_cast<std::size_t>(n) + 1);
  std::vector<Ordinal> coords(p.coords().begin(), p.coords().begin() + keep);
  return IgnatievPoint::make(std::move(coords));
}

IgnatievPoint parse_point(std::string_view text) {
  detail::Cursor c{text};
  if (c.done()) return IgnatievPoint::top();
  std::vector<Ordinal> coords;
  coords.push_back(detail::parse_ordinal_at(c));
  while (c.try_eat(',')) coords.push_back(detail::parse_ordinal_at(c));
  c.expect_end();
  return IgnatievPoint::make(std::move(coords));
}

std::string format_point(const IgnatievPoint& p) {
  if (p.is_top()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.support(); ++i) {
    if (i > 0) out += ',';
    out += format_ordinal(p.coords()[i]);
  }
  return out;
}

bool point_lex_less(const IgnatievPoint& a, const IgnatievPoint& b) {
  return std::lexicographical_compare(
      a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end(),
      [](const Ordinal& x, const Ordinal& y) { return cmp(x, y) == std::strong_ordering::less; });
}

}  // namespace ign
