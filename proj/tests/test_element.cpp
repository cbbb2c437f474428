#include "houghton/element.hpp"

#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <vector>

using namespace houghton;

namespace {

// The running examples: g shifts ray 2 into ray 1, tau swaps the first two
// points of ray 1, sigma swaps the ray heads.
Element make_g() { return Element::ray_shift(2, 2, 1); }
Element make_tau() { return Element::transposition(2, {0, 1}, {1, 1}); }
Element make_sigma() { return Element::transposition(2, {0, 1}, {0, 2}); }

// Deterministic little generator for property tests.
struct Mix {
    std::uint64_t s;
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t k) { return next() % k; }
};

// Random permutation of the N-deep box, as an Element.
Element random_box_perm(Mix& rng, int n, int N) {
    std::vector<RayPoint> pts;
    for (int x = 1; x <= n; ++x)
        for (int i = 0; i < N; ++i) pts.push_back({i, x});
    std::vector<RayPoint> img = pts;
    for (std::size_t i = img.size(); i > 1; --i) std::swap(img[i - 1], img[rng.below(i)]);
    std::vector<std::vector<RayPoint>> tables(n);
    for (int x = 0; x < n; ++x) tables[x].assign(img.begin() + x * N, img.begin() + (x + 1) * N);
    return Element::from_parts(n, TranslationVector(n, 0), std::move(tables));
}

Element random_element(Mix& rng, int n) {
    Element e = random_box_perm(rng, n, 2 + static_cast<int>(rng.below(2)));
    // mix in some translation structure
    int reps = static_cast<int>(rng.below(3));
    for (int i = 0; i < reps; ++i) {
        int a = 1 + static_cast<int>(rng.below(n));
        int b = 1 + static_cast<int>(rng.below(n));
        if (a != b) e = compose(e, Element::ray_shift(n, a, b));
    }
    return e;
}

} // namespace

TEST_CASE("apply follows the table below the threshold and translates above") {
    Element g = make_g();
    CHECK(apply(g, {5, 1}) == RayPoint{6, 1});
    CHECK(apply(g, {0, 2}) == RayPoint{0, 1});
    CHECK(apply(g, {3, 2}) == RayPoint{2, 2});
    Element tau = make_tau();
    CHECK(apply(tau, {0, 1}) == RayPoint{1, 1});
    CHECK(apply(tau, {1, 1}) == RayPoint{0, 1});
    CHECK(apply(tau, {7, 2}) == RayPoint{7, 2});
}

TEST_CASE("canonical form strips redundant table entries") {
    // tau padded with agreeing entries on both rays
    std::vector<std::vector<RayPoint>> tables(2);
    tables[0] = {{1, 1}, {0, 1}, {2, 1}, {3, 1}};
    tables[1] = {{0, 2}, {1, 2}};
    Element padded = Element::from_parts(2, {0, 0}, tables);
    CHECK(padded == make_tau());
    CHECK(padded.threshold(1) == 2);
    CHECK(padded.threshold(2) == 0);
}

TEST_CASE("constructors reject non-bijective tables with diagnostics") {
    std::vector<std::vector<RayPoint>> doubly(2);
    doubly[0] = {{0, 2}};
    doubly[1] = {{0, 2}};
    CHECK_THROWS_WITH_AS(Element::from_parts(2, {0, 0}, doubly),
                         doctest::Contains("doubly-covered"), DomainError);

    std::vector<std::vector<RayPoint>> tail(2);
    tail[0] = {{5, 1}}; // collides with ray 1's translated tail
    CHECK_THROWS_WITH_AS(Element::from_parts(2, {0, 0}, tail),
                         doctest::Contains("tail"), DomainError);

    CHECK_THROWS_AS(Element::from_parts(2, {1, 0}, {{}, {}}), DomainError); // sum != 0
    CHECK_THROWS_AS(Element::from_parts(2, {-1, 1}, {{}, {}}), DomainError); // ray 1 maps below 0
}

TEST_CASE("compose applies left to right") {
    Element tau = make_tau(), sigma = make_sigma();
    Element c = compose(tau, sigma);
    // 3-cycle (0,1) -> (1,1) -> (0,2) -> (0,1)
    CHECK(apply(c, {0, 1}) == RayPoint{1, 1});
    CHECK(apply(c, {1, 1}) == RayPoint{0, 2});
    CHECK(apply(c, {0, 2}) == RayPoint{0, 1});
    CHECK(c == Element::from_cycles(2, {{{0, 1}, {1, 1}, {0, 2}}}));

    CHECK(compose(tau, tau) == Element::identity(2));
    Element g = make_g();
    CHECK(compose(g, invert(g)) == Element::identity(2));
}

TEST_CASE("invert of the basic shift") {
    Element gi = invert(make_g());
    CHECK(phi(gi) == TranslationVector{-1, 1});
    CHECK(apply(gi, {0, 1}) == RayPoint{0, 2});
    CHECK(gi.threshold(1) == 1);
    CHECK(gi.threshold(2) == 0);
    CHECK(invert(Element::identity(2)) == Element::identity(2));
    CHECK(invert(make_tau()) == make_tau());
}

TEST_CASE("phi is the translation vector and a homomorphism") {
    Element g = make_g();
    CHECK(phi(Element::identity(2)) == TranslationVector{0, 0});
    CHECK(phi(g) == TranslationVector{1, -1});
    CHECK(phi(compose(g, g)) == TranslationVector{2, -2});

    Mix rng{11};
    for (int t = 0; t < 50; ++t) {
        Element a = random_element(rng, 3), b = random_element(rng, 3);
        TranslationVector sum(3);
        for (int i = 0; i < 3; ++i) sum[i] = phi(a)[i] + phi(b)[i];
        CHECK(phi(compose(a, b)) == sum);
        long long total = 0;
        for (int v : phi(a)) total += v;
        CHECK(total == 0);
    }
}

TEST_CASE("order is infinite exactly when phi is nonzero") {
    CHECK(!order(make_g()).has_value());
    CHECK(order(make_tau()) == 2);
    CHECK(order(compose(make_tau(), make_sigma())) == 3);
    CHECK(order(Element::identity(2)) == 1);

    Mix rng{12};
    for (int t = 0; t < 60; ++t) {
        Element e = random_element(rng, 2);
        bool zero = std::all_of(phi(e).begin(), phi(e).end(), [](int v) { return v == 0; });
        auto ord = order(e);
        CHECK(ord.has_value() == zero);
        if (ord) {
            CHECK(pow(e, static_cast<long long>(*ord)) == Element::identity(2));
            for (std::uint64_t k = 1; k < *ord; ++k)
                CHECK(pow(e, static_cast<long long>(k)) != Element::identity(2));
        }
    }
}

TEST_CASE("cycle types") {
    CHECK(cycle_type(make_tau()) == CycleType{2});
    Element q2 = Element::from_cycles(2, {{{0, 1}, {1, 1}}, {{2, 1}, {3, 1}}});
    CHECK(cycle_type(q2) == CycleType{2, 2});
    CHECK(cycle_type(compose(make_tau(), make_sigma())) == CycleType{3});
    CHECK_THROWS_AS(cycle_type(make_g()), DomainError);
}

TEST_CASE("group axioms on random triples") {
    Mix rng{13};
    for (int t = 0; t < 40; ++t) {
        Element a = random_element(rng, 2), b = random_element(rng, 2), c = random_element(rng, 2);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, Element::identity(2)) == a);
        CHECK(compose(Element::identity(2), a) == a);
        CHECK(compose(a, invert(a)) == Element::identity(2));
        CHECK(compose(invert(a), a) == Element::identity(2));
    }
}

TEST_CASE("conjugation maps cycles through the conjugator") {
    Mix rng{14};
    for (int t = 0; t < 40; ++t) {
        Element q = random_box_perm(rng, 2, 3);
        Element h = random_element(rng, 2);
        Element qc = conjugate(q, h);
        CHECK(cycle_type(qc) == cycle_type(q));
        for (const auto& cyc : cycles(q)) {
            // h-image of each cycle is a cycle of the conjugate
            for (std::size_t i = 0; i < cyc.size(); ++i)
                CHECK(apply(qc, apply(h, cyc[i])) == apply(h, cyc[(i + 1) % cyc.size()]));
        }
    }
}

TEST_CASE("conjugator finds a finite-support witness exactly for equal cycle types") {
    Element tau = make_tau(), sigma = make_sigma();
    auto h = conjugator(tau, sigma);
    REQUIRE(h.has_value());
    CHECK(conjugate(tau, *h) == sigma);
    CHECK(*h == Element::transposition(2, {1, 1}, {0, 2}));

    Element q2 = Element::from_cycles(2, {{{0, 1}, {1, 1}}, {{2, 1}, {3, 1}}});
    CHECK(!conjugator(tau, q2).has_value());
    auto self = conjugator(tau, tau);
    REQUIRE(self.has_value());
    CHECK(conjugate(tau, *self) == tau);
    CHECK_THROWS_AS(conjugator(make_g(), tau), DomainError);

    Mix rng{15};
    for (int t = 0; t < 60; ++t) {
        Element a = random_box_perm(rng, 2, 3);
        Element b = random_box_perm(rng, 2, 3);
        auto w = conjugator(a, b);
        CHECK(w.has_value() == (cycle_type(a) == cycle_type(b)));
        if (w) CHECK(conjugate(a, *w) == b);
    }
}

TEST_CASE("arity mismatches are rejected, never embedded") {
    CHECK_THROWS_AS(compose(make_g(), Element::identity(3)), DomainError);
    CHECK_THROWS_AS(conjugator(make_tau(), Element::identity(3)), DomainError);
    CHECK_THROWS_AS(apply(make_g(), RayPoint{0, 3}), DomainError);
}
