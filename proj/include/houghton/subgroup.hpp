#pragma once

#include "houghton/element.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace houghton {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// A finite subgroup of H_n stored as its full sorted element list.  All
/// elements have phi = 0, so the union of their supports (the moved set
/// S_Q) is finite.
class FiniteSubgroup {
public:
    /// Saturate the generators under composition.  Generators must have
    /// finite order; the walk aborts past `cap` elements.
    static FiniteSubgroup closure(const std::vector<Element>& generators,
                                  std::size_t cap = kDefaultClosureCap);

    static FiniteSubgroup trivial(int arity);

    /// Wrap an already-closed element list (internal shortcut for
    /// subgroups carved out of a verified closure).
    static FiniteSubgroup from_closed(int arity, std::vector<Element> elements,
                                      std::vector<Element> generators);

    int arity() const noexcept { return arity_; }
    const std::vector<Element>& elements() const noexcept { return elements_; }
    const std::vector<Element>& generators() const noexcept { return generators_; }
    std::uint64_t order() const noexcept { return elements_.size(); }
    bool contains(const Element& e) const;

    /// S_Q, sorted by (ray, index).
    const std::vector<RayPoint>& moved_points() const noexcept { return moved_; }

    friend bool operator==(const FiniteSubgroup& a, const FiniteSubgroup& b) {
        return a.arity_ == b.arity_ && a.elements_ == b.elements_;
    }

private:
    int arity_ = 0;
    std::vector<Element> elements_;   // sorted
    std::vector<Element> generators_;
    std::vector<RayPoint> moved_;
};

/// {q in Q : q p = p}.
FiniteSubgroup isotropy(const FiniteSubgroup& Q, const RayPoint& p);

/// One class of the isotropy partition: the points of S_Q whose isotropy
/// groups form a single Q-conjugacy class.
struct IsotropyClass {
    std::vector<RayPoint> points;               // S_a, sorted
    std::vector<std::vector<RayPoint>> orbits;  // Q-orbits of S_a, by least point
    std::vector<RayPoint> representatives;      // one per orbit, all with isotropy == isotropy_group
    FiniteSubgroup isotropy_group;              // Q_a: isotropy of the least point of S_a
    std::uint64_t index = 0;                    // [Q : Q_a] = common orbit size
    std::uint64_t multiplicity = 0;             // r_a = |S_a| / [Q : Q_a]
};

struct IsotropyPartition {
    std::vector<RayPoint> moved;       // S_Q; the fixed region S^Q is its complement
    std::vector<IsotropyClass> classes; // ordered by least point
};

/// S = S^Q u S_1 u ... u S_t grouped by Q-conjugacy of isotropy groups.
IsotropyPartition partition(const FiniteSubgroup& Q);

/// N_Q(Qa)/Qa realized on the right cosets of Qa in Q.
struct WeylGroup {
    std::uint64_t degree = 0;                       // [Q : Qa]
    std::vector<std::vector<std::uint32_t>> perms;  // all elements as coset permutations, sorted
    std::uint64_t order() const noexcept { return perms.size(); }
};

WeylGroup weyl(const FiniteSubgroup& Q, const FiniteSubgroup& Qa);

} // namespace houghton
