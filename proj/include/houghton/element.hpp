#pragma once

#include "houghton/point.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace houghton {

/// Error with a stable machine-readable code (also the CLI error code).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::runtime_error(detail.empty() ? code : code + ": " + detail),
          code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Per-ray translation amounts (m_1, ..., m_n); sums to zero for group
/// elements, is nonnegative in total for monoid maps.
using TranslationVector = std::vector<int>;

/// Multiset of nontrivial cycle lengths, sorted ascending, entries >= 2.
using CycleType = std::vector<std::uint64_t>;

/// An element of Houghton's group H_n.
///
/// Beyond the per-ray threshold z_x the map is (i,x) -> (i+m_x, x); below
/// it the image is read from an explicit per-ray table.  The stored form
/// is canonical: each z_x (the table length on ray x) is minimal, so two
/// Elements are equal as permutations iff they are structurally equal.
class Element {
public:
    Element() = default;

    static Element identity(int arity);

    /// Build from raw parts and canonicalize.  `tables[x-1][i]` is the
    /// image of (i,x) for i < tables[x-1].size(); beyond that the ray
    /// translates by m[x-1].  Rejects non-bijective data with a
    /// diagnostic listing uncovered / doubly-covered points.
    static Element from_parts(int arity, TranslationVector m,
                              std::vector<std::vector<RayPoint>> tables);

    /// Finite-support permutation given by disjoint cycles.
    static Element from_cycles(int arity, const std::vector<std::vector<RayPoint>>& cycles);

    static Element transposition(int arity, const RayPoint& a, const RayPoint& b);

    /// The basic infinite-order element feeding ray `src` into ray `dst`:
    /// m_dst = +1, m_src = -1, (0,src) -> (0,dst).
    static Element ray_shift(int arity, int src, int dst);

    int arity() const noexcept { return arity_; }
    const TranslationVector& translations() const noexcept { return m_; }
    int translation(int ray) const { return m_.at(ray - 1); }
    int threshold(int ray) const { return static_cast<int>(tables_.at(ray - 1).size()); }
    const std::vector<std::vector<RayPoint>>& tables() const noexcept { return tables_; }

    bool is_identity() const noexcept;

    RayPoint apply(const RayPoint& p) const;

    /// Points moved by this element.  Finite-order elements only (the
    /// moved set of a translating element is infinite).
    std::vector<RayPoint> support() const;

    /// Fixed points below the thresholds (the tail part is fixed exactly
    /// on the rays with m_x = 0).
    std::vector<RayPoint> fixed_low_points() const;

    friend bool operator==(const Element&, const Element&) = default;
    friend std::strong_ordering operator<=>(const Element& a, const Element& b);

    std::size_t hash() const noexcept;

private:
    int arity_ = 0;
    TranslationVector m_;
    std::vector<std::vector<RayPoint>> tables_;
};

struct ElementHash {
    std::size_t operator()(const Element& e) const noexcept { return e.hash(); }
};

RayPoint apply(const Element& e, const RayPoint& p);

/// Group law, left to right: the result applies `a` first, then `b`.
Element compose(const Element& a, const Element& b);

Element invert(const Element& e);

Element pow(const Element& e, long long k);

/// The translation homomorphism h -> (m_1, ..., m_n).
const TranslationVector& phi(const Element& e);

/// nullopt encodes infinite order (exactly when phi(e) != 0).
std::optional<std::uint64_t> order(const Element& e);

/// The conjugate of q transported by h: its cycles are the h-images of
/// the cycles of q.  In left-action notation this is h q h^-1.
Element conjugate(const Element& q, const Element& h);

/// Disjoint cycles of a finite-order element, each rotated to start at
/// its least moved point, listed in order of that point.
std::vector<std::vector<RayPoint>> cycles(const Element& e);

CycleType cycle_type(const Element& e);

/// A finite-support h with conjugate(q1, h) == q2, or nullopt exactly
/// when the cycle types differ.  Cycles of equal length are matched in
/// order of their least moved point.
std::optional<Element> conjugator(const Element& q1, const Element& q2);

} // namespace houghton
