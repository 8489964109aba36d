#include "ignatiev/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ign {

namespace {

void validate(const EnumerationBound& b) {
  if (b.max_height < 1 || b.max_terms < 1 || b.max_coeff < 1 || b.max_support < 1)
    throw std::invalid_argument("enumeration bounds must all be >= 1");
}

bool ordinal_less(const Ordinal& a, const Ordinal& b) {
  return cmp(a, b) == std::strong_ordering::less;
}

bool contains(std::span<const Ordinal> sorted, const Ordinal& a) {
  return std::binary_search(sorted.begin(), sorted.end(), a, ordinal_less);
}

}  // namespace

std::vector<Ordinal> enumerate_ordinals(const EnumerationBound& b) {
  validate(b);
  std::vector<Ordinal> pool;  // 0 plus towers 1, w, w^w, ... of height < max_height
  pool.emplace_back();
  Ordinal tower(1);
  pool.push_back(tower);
  for (unsigned k = 1; k < b.max_height; ++k) {
    tower = omega_pow(tower);
    pool.push_back(tower);
  }

  std::vector<Ordinal> out;
  std::vector<OrdinalTerm> acc;
  auto rec = [&](auto&& self, std::size_t next_exp) -> void {
    out.push_back(Ordinal::from_terms(acc));
    if (acc.size() == b.max_terms) return;
    for (std::size_t i = next_exp; i-- > 0;) {
      for (std::uint64_t c = 1; c <= b.max_coeff; ++c) {
        acc.push_back(OrdinalTerm{pool[i], c});
        self(self, i);
        acc.pop_back();
      }
    }
  };
  rec(rec, pool.size());
  std::sort(out.begin(), out.end(), ordinal_less);
  return out;
}

std::vector<IgnatievPoint> enumerate_points(const EnumerationBound& b) {
  auto ordinals = enumerate_ordinals(b);
  std::vector<IgnatievPoint> out;
  std::vector<Ordinal> acc;
  auto rec = [&](auto&& self) -> void {
    out.push_back(IgnatievPoint::make(acc));
    if (acc.size() == b.max_support) return;
    for (std::size_t k = 1; k < ordinals.size(); ++k) {  // skip 0
      if (!acc.empty() && cmp(ordinals[k], ell(acc.back())) == std::strong_ordering::greater)
        break;  // ascending, nothing later fits either
      acc.push_back(ordinals[k]);
      self(self);
      acc.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::vector<SuitableSequence> enumerate_suitable_sequences(const EnumerationBound& b) {
  auto ordinals = enumerate_ordinals(b);
  std::vector<ExtOrdinal> pool;
  for (std::size_t k = 1; k < ordinals.size(); ++k) {
    // Coordinate 1 only ever extends to more 1s, which canonicalize away.
    if (ordinals[k] == Ordinal(1)) continue;
    pool.emplace_back(ordinals[k]);
  }
  pool.push_back(ExtOrdinal::epsilon_zero());

  std::vector<SuitableSequence> out;
  out.push_back(SuitableSequence::all_ones());
  out.push_back(SuitableSequence::improper());
  std::vector<ExtOrdinal> acc;
  auto rec = [&](auto&& self) -> void {
    if (!acc.empty()) out.push_back(SuitableSequence::make(acc, Tail::One));
    if (acc.size() == b.max_support) return;
    for (const ExtOrdinal& c : pool) {
      if (!acc.empty() && !inab_pair_ok(acc.back(), c)) continue;
      acc.push_back(c);
      self(self);
      acc.pop_back();
    }
  };
  rec(rec);
  return out;
}

IgnatievPoint brute_glb(const IgnatievPoint& p, const IgnatievPoint& q,
                        std::span<const IgnatievPoint> points) {
  const IgnatievPoint* best = nullptr;
  for (const IgnatievPoint& r : points) {
    if (!leq(r, p) || !leq(r, q)) continue;
    if (best == nullptr || leq(*best, r)) best = &r;
  }
  if (best == nullptr) throw NoMaximum();
  for (const IgnatievPoint& r : points) {
    if (!leq(r, p) || !leq(r, q)) continue;
    if (!leq(r, *best)) throw NoMaximum();
  }
  return *best;
}

IgnatievPoint brute_glb(const IgnatievPoint& p, const IgnatievPoint& q,
                        const EnumerationBound& b) {
  auto points = enumerate_points(b);
  return brute_glb(p, q, points);
}

std::optional<std::size_t> SigmaOracleResult::first_unattained() const {
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (!coords[i].has_value()) return i;
  }
  return std::nullopt;
}

SigmaOracleResult brute_sup_sigma(unsigned n, const SuitableSequence& f,
                                  std::span<const Ordinal> ordinals) {
  SigmaOracleResult res;
  res.coords.assign(static_cast<std::size_t>(n) + 1, std::nullopt);
  ExtOrdinal next{Ordinal(1)};
  bool ok = true;
  for (std::size_t i = static_cast<std::size_t>(n) + 1; i-- > 0;) {
    if (!ok) continue;
    ExtOrdinal a = f.at(i);
    // The defining set has an enumerated maximum exactly when both range
    // endpoints are successors whose predecessors are enumerated.
    if (!is_successor(a) || !contains(ordinals, pred(a)) ||
        !is_successor(next) || !contains(ordinals, pred(next))) {
      ok = false;
      continue;
    }
    const Ordinal& av = a.ordinal();
    const Ordinal& nv = next.ordinal();
    std::optional<Ordinal> best;
    for (const Ordinal& gamma : ordinals) {
      if (cmp(gamma, av) != std::strong_ordering::less) break;
      for (const Ordinal& delta : ordinals) {
        if (cmp(delta, nv) != std::strong_ordering::less) break;
        Ordinal v = add(add(gamma, omega_pow(delta)), Ordinal(1));
        if (!best || cmp(*best, v) == std::strong_ordering::less) best = std::move(v);
      }
    }
    res.coords[i] = ExtOrdinal(*best);  // gamma = delta = 0 is always available
    next = *res.coords[i];
  }
  return res;
}

SigmaOracleResult brute_sup_sigma(unsigned n, const SuitableSequence& f,
                                  const EnumerationBound& b) {
  auto ordinals = enumerate_ordinals(b);
  return brute_sup_sigma(n, f, ordinals);
}

ClosureReport check_filter_closure(const std::vector<ExtOrdinal>& prefix, Tail tail,
                                   const EnumerationBound& b) {
  auto ordinals = enumerate_ordinals(b);
  auto at = [&](std::size_t i) -> ExtOrdinal {
    return i < prefix.size() ? prefix[i]
                             : (tail == Tail::One ? ExtOrdinal(Ordinal(1))
                                                  : ExtOrdinal::epsilon_zero());
  };
  std::size_t last = prefix.size() + 1;  // one index past the seam

  // (i) every projection contains 0
  for (std::size_t i = 0; i <= last; ++i) {
    if (cmp(ExtOrdinal(), at(i)) != std::strong_ordering::less) {
      return {false, "(i) empty projection at index " + std::to_string(i)};
    }
  }
  // (ii) downward closure of the initial segments
  for (std::size_t i = 0; i <= last; ++i) {
    for (const Ordinal& alpha : ordinals) {
      if (cmp(ExtOrdinal(alpha), at(i)) != std::strong_ordering::less) break;
      for (const Ordinal& beta : ordinals) {
        if (cmp(beta, alpha) != std::strong_ordering::less) break;
        if (cmp(ExtOrdinal(beta), at(i)) != std::strong_ordering::less) {
          return {false, "(ii) at index " + std::to_string(i) + ": alpha=" + format_ordinal(alpha) +
                             " in projection but beta=" + format_ordinal(beta) + " is not"};
        }
      }
    }
  }
  // (iii) alpha in F_i, beta in F_{i+1}, ell(alpha) < beta => alpha + w^beta in F_i
  for (std::size_t i = 0; i < last; ++i) {
    if (at(i).is_epsilon_zero()) continue;  // every sum stays below e0
    for (const Ordinal& alpha : ordinals) {
      if (cmp(ExtOrdinal(alpha), at(i)) != std::strong_ordering::less) break;
      for (const Ordinal& beta : ordinals) {
        if (cmp(ExtOrdinal(beta), at(i + 1)) != std::strong_ordering::less) break;
        if (cmp(ell(alpha), beta) != std::strong_ordering::less) continue;
        Ordinal sum = add(alpha, omega_pow(beta));
        if (cmp(ExtOrdinal(sum), at(i)) != std::strong_ordering::less) {
          return {false, "(iii) at index " + std::to_string(i) + ": alpha=" + format_ordinal(alpha) +
                             " beta=" + format_ordinal(beta) + " gives " + format_ordinal(sum) +
                             " outside the projection"};
        }
      }
    }
  }
  return {};
}

ClosureReport check_filter_closure(const SuitableSequence& f, const EnumerationBound& b) {
  return check_filter_closure(f.prefix(), f.tail(), b);
}

}  // namespace ign
