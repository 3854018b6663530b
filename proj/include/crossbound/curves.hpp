#pragma once
// Combinatorial model of the curve family on the ribbon surface of K_{p,q}:
// a curve is a consecutive upper-vertex pair plus a k-subset of the q lower
// vertices. Provides enumeration, pair classification with the 0/2k/4k
// intersection bounds, the closed-form crossing bound together with an exact
// pair-summation oracle, and surface-topology bookkeeping.

#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "crossbound/combinatorics.hpp"
#include "crossbound/errors.hpp"
#include "crossbound/hp.hpp"

namespace crossbound::curves {

using hp::BigInt;

struct FamilySpec {
  long long p = 0;  // upper vertices, >= 2
  long long q = 0;  // lower vertices, >= 2
  long long k = 0;  // odd subset size in [1, q]
};

inline void validate(const FamilySpec& s) {
  if (s.p < 2) throw std::invalid_argument("FamilySpec: p must be >= 2");
  if (s.q < 2) throw std::invalid_argument("FamilySpec: q must be >= 2");
  if (s.k < 1 || s.k > s.q) throw std::invalid_argument("FamilySpec: k must lie in [1, q]");
  if (s.k % 2 == 0) throw std::invalid_argument("FamilySpec: k must be odd");
}

struct CurveSpec {
  long long upper_pair = 0;              // index in [0, p-2]
  std::vector<long long> lower_subset;   // strictly increasing, values in [0, q-1]

  friend bool operator==(const CurveSpec& a, const CurveSpec& b) {
    return a.upper_pair == b.upper_pair && a.lower_subset == b.lower_subset;
  }
  friend auto operator<=>(const CurveSpec& a, const CurveSpec& b) = default;
};

struct PairClass {
  int shared_upper = 0;               // 0, 1, or 2 shared upper vertices
  long long intersection_bound = 0;   // 0 / 2k / 4k
};

struct SurfaceTopology {
  long long euler_characteristic = 0;
  long long boundary_components = 0;
  long long genus = 0;
};

struct EmbeddingReport {
  bool embeds = false;
  long long chi = 0;
  long long slack = 0;  // (2g-2) - |chi|
};

// M(p,q;k) = (p-1) * C(q,k)
inline BigInt family_size(const FamilySpec& s) {
  validate(s);
  return BigInt(s.p - 1) * combinatorics::binomial_exact(s.q, s.k);
}

// Streams the family in deterministic order: upper_pair major, lower subsets
// in colexicographic order.
class FamilyEnumerator {
 public:
  explicit FamilyEnumerator(const FamilySpec& spec) : spec_(spec) {
    validate(spec);
    cur_.upper_pair = 0;
    cur_.lower_subset.resize(static_cast<size_t>(spec.k));
    std::iota(cur_.lower_subset.begin(), cur_.lower_subset.end(), 0);
  }

  std::optional<CurveSpec> next() {
    if (done_) return std::nullopt;
    CurveSpec out = cur_;
    advance();
    return out;
  }

 private:
  void advance() {
    auto& s = cur_.lower_subset;
    const long long k = spec_.k;
    // colex successor: bump the lowest element that has room, reset below it
    long long j = 0;
    while (j < k) {
      const long long limit = (j + 1 < k) ? s[static_cast<size_t>(j) + 1] : spec_.q;
      if (s[static_cast<size_t>(j)] + 1 < limit) break;
      ++j;
    }
    if (j < k) {
      ++s[static_cast<size_t>(j)];
      std::iota(s.begin(), s.begin() + j, 0);
      return;
    }
    // subset space exhausted for this upper pair
    if (cur_.upper_pair + 1 <= spec_.p - 2) {
      ++cur_.upper_pair;
      std::iota(s.begin(), s.end(), 0);
      return;
    }
    done_ = true;
  }

  FamilySpec spec_;
  CurveSpec cur_;
  bool done_ = false;
};

inline std::vector<CurveSpec> enumerate_family(const FamilySpec& spec, const BigInt& cap) {
  const BigInt size = family_size(spec);
  if (size > cap) throw BudgetExceeded("enumerate_family: family exceeds cap", size.str());
  std::vector<CurveSpec> out;
  out.reserve(static_cast<size_t>(size));
  FamilyEnumerator en(spec);
  while (auto c = en.next()) out.push_back(std::move(*c));
  return out;
}

// Vertex-level overlap of the two consecutive upper pairs, and the resulting
// per-pair intersection bound (0 disjoint, 2k one shared vertex, 4k two).
inline PairClass classify_pair(const CurveSpec& a, const CurveSpec& b, const FamilySpec& spec) {
  validate(spec);
  if (a == b) throw std::invalid_argument("classify_pair: curves are identical");
  PairClass out;
  const long long d = a.upper_pair > b.upper_pair ? a.upper_pair - b.upper_pair
                                                  : b.upper_pair - a.upper_pair;
  out.shared_upper = d == 0 ? 2 : (d == 1 ? 1 : 0);
  out.intersection_bound = out.shared_upper == 0 ? 0 : (out.shared_upper == 1 ? 2 * spec.k : 4 * spec.k);
  return out;
}

// Sum of classify_pair bounds over all unordered pairs of distinct curves,
// by full enumeration.
inline BigInt exact_pair_bound_sum(const FamilySpec& spec, const BigInt& cap) {
  const auto fam = enumerate_family(spec, cap);
  BigInt total = 0;
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = i + 1; j < fam.size(); ++j)
      total += classify_pair(fam[i], fam[j], spec).intersection_bound;
  return total;
}

// Independent closed form for the same sum: (p-1)*C(N,2)*4k same-pair curves
// plus (p-2)*N^2*2k adjacent-pair curves, N = C(q,k).
inline BigInt pair_bound_sum_closed_form(const FamilySpec& spec) {
  validate(spec);
  const BigInt n = combinatorics::binomial_exact(spec.q, spec.k);
  const BigInt same = BigInt(spec.p - 1) * (n * (n - 1) / 2) * (4 * spec.k);
  const BigInt adjacent = BigInt(spec.p - 2) * n * n * (2 * spec.k);
  return same + adjacent;
}

// 4k M^2 / (p-1); exact since (p-1) divides M^2.
inline BigInt family_crossing_bound(const FamilySpec& spec) {
  validate(spec);
  const BigInt n = combinatorics::binomial_exact(spec.q, spec.k);
  return BigInt(4 * spec.k) * (spec.p - 1) * n * n;
}

// Per-curve crossing budget 8k C(q,k); equals 2 * family_crossing_bound / M.
inline BigInt per_curve_bound(const FamilySpec& spec) {
  validate(spec);
  return BigInt(8 * spec.k) * combinatorics::binomial_exact(spec.q, spec.k);
}

// chi = p + q - pq, boundary components = gcd(p,q), genus from
// chi = 2 - 2*genus - boundary.
inline SurfaceTopology surface_topology(long long p, long long q) {
  if (p < 2 || q < 2) throw std::invalid_argument("surface_topology: p, q must be >= 2");
  SurfaceTopology out;
  out.euler_characteristic = p + q - p * q;
  out.boundary_components = std::gcd(p, q);
  const long long twice_genus = 2 - out.euler_characteristic - out.boundary_components;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw CertificateViolation("surface_topology: 2 - chi - b is not an even nonnegative integer");
  out.genus = twice_genus / 2;
  return out;
}

// Embedding criterion: |chi| <= 2g - 2 suffices for a compact orientable
// surface with boundary to embed in the closed genus-g surface.
inline EmbeddingReport embedding_check(long long p, long long q, long long g) {
  if (p < 2 || q < 2) throw std::invalid_argument("embedding_check: p, q must be >= 2");
  if (g < 2) throw std::invalid_argument("embedding_check: g must be >= 2");
  EmbeddingReport out;
  out.chi = p + q - p * q;
  const long long abs_chi = out.chi < 0 ? -out.chi : out.chi;
  out.embeds = abs_chi <= 2 * g - 2;
  out.slack = 2 * g - 2 - abs_chi;
  return out;
}

// Every unordered pair of distinct curves must differ in its used vertex set
// (upper pair vertices plus lower subset). Uppers and lowers live in disjoint
// id spaces.
inline bool distinctness_check(const FamilySpec& spec, const BigInt& cap) {
  const auto fam = enumerate_family(spec, cap);
  std::vector<std::set<long long>> used(fam.size());
  for (size_t i = 0; i < fam.size(); ++i) {
    used[i].insert(fam[i].upper_pair);
    used[i].insert(fam[i].upper_pair + 1);
    for (long long v : fam[i].lower_subset) used[i].insert(spec.p + v);
  }
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = i + 1; j < fam.size(); ++j)
      if (used[i] == used[j]) return false;
  return true;
}

}  // namespace crossbound::curves
