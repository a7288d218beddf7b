#include <doctest.h>

#include "sr/newton.hpp"
#include "sr/parse.hpp"

#include <random>

using namespace sr;

namespace {
PuiseuxPoly P(const char* s) { return parse_poly(s); }
Point2 pt(long long a, long long b) { return {Rational(a), Rational(b)}; }

// Phi(x) - C with x1 = (2 z1 + z2)/3, x2 - delta = (z2 - z1)/(3c), c^3 = 2 delta,
// expanded by plain polynomial arithmetic.
PuiseuxPoly counterexample_in_z(const Rational& c) {
    PuiseuxPoly z1 = PuiseuxPoly::x1(), z2 = PuiseuxPoly::x2();
    PuiseuxPoly x1 = Rational(1, 3) * (Rational(2) * z1 + z2);
    PuiseuxPoly y = (Rational(1) / (Rational(3) * c)) * (z2 - z1);
    Rational delta = c.pow(3) / 2;
    return x1.pow(3) + y.pow(4) + (Rational(4) * delta) * y.pow(3) - (Rational(3) * c * c) * x1 * y.pow(2);
}
}  // namespace

TEST_CASE("two-point support") {
    NewtonPolyhedron np = newton_polyhedron(P("x2^3 + x1^9"));
    REQUIRE(np.vertices().size() == 2);
    CHECK(np.vertices()[0] == pt(0, 3));
    CHECK(np.vertices()[1] == pt(9, 0));
    REQUIRE(np.edges().size() == 1);
    CHECK(np.edges()[0].weight == Weight(Rational(1, 9), Rational(1, 3)));
}

TEST_CASE("interior support points are not vertices") {
    // (7,1): 7/9 + 1/3 = 10/9 > 1 lies strictly above the edge.
    NewtonPolyhedron np = newton_polyhedron(P("x2^3 + x1^9 + x1^7*x2"));
    CHECK(np.vertices() == std::vector<Point2>{pt(0, 3), pt(9, 0)});
    CHECK(np.contains(pt(7, 1)));
    CHECK_FALSE(np.contains(pt(4, 1)));
}

TEST_CASE("collinear support points are dropped") {
    NewtonPolyhedron np = newton_polyhedron(P("x2^2 + x1*x2 + x1^2"));
    CHECK(np.vertices() == std::vector<Point2>{pt(0, 2), pt(2, 0)});
}

TEST_CASE("counterexample geometry: transformed polynomial") {
    // delta = 1/16 makes c = (2 delta)^(1/3) = 1/2 rational.
    Rational c(1, 2);
    PuiseuxPoly phi = counterexample_in_z(c);
    // Closed form z1^2 z2 + ((z2 - z1)/(3c))^4.
    PuiseuxPoly closed = P("x1^2*x2") + (Rational(1) / (Rational(3) * c)).pow(4) * P("(x2 - x1)^4");
    CHECK(phi == closed);

    NewtonPolyhedron np = newton_polyhedron(phi);
    Face f = principal_face(np);
    REQUIRE(f.kind == FaceKind::edge);
    CHECK(f.points == std::vector<Point2>{pt(0, 4), pt(2, 1)});
    CHECK(principal_weight(f) == Weight(Rational(3, 8), Rational(1, 4)));
    CHECK(newton_distance(np) == Rational(8, 5));
    // Principal part z1^2 z2 + z2^4 / (81 c^4).
    CHECK(kappa_principal_part(phi, principal_weight(f)) ==
          P("x1^2*x2") + (Rational(1) / (Rational(81) * c.pow(4))) * P("x2^4"));
}

TEST_CASE("principal faces") {
    CHECK(principal_face(newton_polyhedron(P("x2^3 + x1^9"))).points == std::vector<Point2>{pt(0, 3), pt(9, 0)});
    Face v = principal_face(newton_polyhedron(P("x1^3*x2^3 + x1^7 + x2^8")));
    CHECK(v.kind == FaceKind::vertex);
    CHECK(v.points == std::vector<Point2>{pt(3, 3)});
    CHECK(newton_distance(newton_polyhedron(P("x1^3*x2^3"))) == 3);
    CHECK_THROWS_AS(principal_weight(v), NoFiniteWeight);
    // Bisectrix through a vertex shared by two edges: the vertex wins.
    Face tie = principal_face(newton_polyhedron(P("x2^5 + x1^2*x2^2 + x1^6")));
    CHECK(tie.kind == FaceKind::vertex);
    CHECK(tie.points == std::vector<Point2>{pt(2, 2)});
    // Bisectrix meets the vertical ray above (3,2): an unbounded edge, no weight.
    Face ray = principal_face(newton_polyhedron(P("x1^3*x2^2 + x1^7")));
    CHECK(ray.kind == FaceKind::edge);
    CHECK_FALSE(ray.compact());
    CHECK_THROWS_AS(principal_weight(ray), NoFiniteWeight);
    CHECK(newton_distance(newton_polyhedron(P("x1^3*x2^2 + x1^7"))) == 3);
}

TEST_CASE("Newton distances") {
    CHECK(newton_distance(newton_polyhedron(P("x1^4 + x2^6"))) == Rational(12, 5));
    CHECK(newton_distance(newton_polyhedron(P("x2^3 + x1^9"))) == Rational(9, 4));
}

TEST_CASE("principal weights") {
    CHECK(principal_weight(Face{FaceKind::edge, {pt(0, 4), pt(2, 1)}, {}, {}}) == Weight(Rational(3, 8), Rational(1, 4)));
    CHECK(principal_weight(Face{FaceKind::edge, {pt(0, 3), pt(9, 0)}, {}, {}}) == Weight(Rational(1, 9), Rational(1, 3)));
    Rational H(7, 2), n(13);
    Face f{FaceKind::edge, {{0, H}, {n, 0}}, {}, {}};
    CHECK(principal_weight(f) == Weight(1 / n, 1 / H));
}

TEST_CASE("kappa principal parts") {
    Weight w(Rational(1, 9), Rational(1, 3));
    CHECK(kappa_principal_part(P("x2^3 + x1^9 + x1^7*x2"), w) == P("x2^3 + x1^9"));
    CHECK(kappa_principal_part(P("x2^3 - 2*x1^3*x2^2"), w) == P("x2^3 - 2*x1^3*x2^2"));
    // x1^A x2^B + c1 x1^n with kappa = (1/n, (n-A)/(B n)); A=1, B=4, n=11.
    Weight wt(Rational(1, 11), Rational(10, 44));
    CHECK(kappa_principal_part(P("x1*x2^4 + 3*x1^11 + x1^5*x2^3 + x1^12"), wt) == P("x1*x2^4 + 3*x1^11"));
}

TEST_CASE("dilations") {
    Weight w(Rational(1, 9), Rational(1, 3));
    CHECK(dilate(P("x2^3"), w, 8) == P("8*x2^3"));
    PuiseuxPoly p = P("x2^3 + x1^9 + x1^7*x2 + 5*x1^(3/2)");
    CHECK(dilate(p, w, 1) == p);
    CHECK_THROWS_AS(dilate(P("x1"), w, 2), std::domain_error);
    // Pointwise: dilate(p)(x) = p(r^k1 x1, r^k2 x2) exactly at rational points.
    Rational r = Rational(2).pow(18);  // perfect 9th, 3rd and 6th power
    PuiseuxPoly q = dilate(p, w, r);
    for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{{Rational(4), Rational(-2, 3)}, {Rational(9, 4), 5}}) {
        Rational x1 = *r.exact_pow(w.k1) * a, x2 = *r.exact_pow(w.k2) * b;
        CHECK(*evaluate_exact(q, a, b) == *evaluate_exact(p, x1, x2));
    }
}

TEST_CASE("properties on random supports") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        PuiseuxPoly p;
        int n = 1 + static_cast<int>(rng() % 6);
        for (int k = 0; k < n; ++k)
            p.add_term(Exponent2(Rational(static_cast<long long>(rng() % 13), 1 + static_cast<long long>(rng() % 3)),
                                 Rational(static_cast<long long>(rng() % 9))),
                       1);
        NewtonPolyhedron np = newton_polyhedron(p);
        // vertices come from the support, every support point is inside
        for (const auto& v : np.vertices()) CHECK(p.coefficient(Exponent2(v.t1, v.t2)) != 0);
        for (const auto& e : p.support()) CHECK(np.contains(to_point(e)));
        // slopes strictly decrease in magnitude from left to right
        for (std::size_t i = 0; i + 1 < np.edges().size(); ++i)
            CHECK(np.edges()[i].weight.m() < np.edges()[i + 1].weight.m());
        Rational d = newton_distance(np);
        Face f = principal_face(np);
        if (f.kind == FaceKind::edge && f.compact()) {
            Weight w = principal_weight(f);
            CHECK(w.degree(Point2{d, d}) == 1);
            PuiseuxPoly pp = kappa_principal_part(p, w);
            CHECK(kappa_principal_part(pp, w) == pp);
            CHECK(is_kappa_homogeneous(pp, w));
        }
        // adding a dominated term does not change the hull
        Exponent2 e0 = p.support().front();
        PuiseuxPoly q = p + PuiseuxPoly::monomial(3, e0.e1 + Rational(static_cast<long long>(rng() % 3)),
                                                  e0.e2 + Rational(static_cast<long long>(rng() % 3)));
        NewtonPolyhedron nq = newton_polyhedron(q);
        CHECK(nq.vertices() == np.vertices());
    }
}

TEST_CASE("supporting line of slope 1/m") {
    NewtonPolyhedron np = newton_polyhedron(P("x1*x2^3 + x1^9"));
    Weight L = supporting_weight(np, 2);
    CHECK(L == Weight(Rational(1, 7), Rational(2, 7)));
    CHECK(L.distance() == Rational(7, 3));
}

TEST_CASE("augmented polyhedron: the Z configuration") {
    // B = 3, m = 2: edges L+ and [(1,3),(n,0)].
    NewtonPolyhedron np = newton_polyhedron(P("x1*x2^3 + x1^10"));
    Weight L(Rational(1, 7), Rational(2, 7));
    NewtonPolyhedron nr = augmented_polyhedron(np, L);
    CHECK(nr.vertices() == std::vector<Point2>{pt(1, 3), pt(10, 0)});
    REQUIRE(nr.edges().size() == 1);
    CHECK(nr.left_ray() == Point2{Rational(-2, 7), Rational(1, 7)});
    CHECK(nr.contains(Point2{Rational(-3), Rational(5)}));  // on L, left of the quadrant
    Rational hr = r_height(nr, 2);
    CHECK(hr == Rational(7, 3));
    CHECK(hr == L.distance());
    CHECK_THROWS_AS(augmented_polyhedron(np, Weight(Rational(1, 6), Rational(1, 3))), std::invalid_argument);
    CHECK_THROWS_AS(augmented_polyhedron(np, Weight(Rational(1, 8), Rational(1, 4))), std::invalid_argument);
}

TEST_CASE("augmented polyhedron keeps an edge lying on L") {
    // L: t1 + 2 t2 = 6 contains the edge [(0,3),(2,2)].
    NewtonPolyhedron np = newton_polyhedron(P("x2^3 + x1^2*x2^2 + x1^9"));
    Weight L = supporting_weight(np, 2);
    NewtonPolyhedron nr = augmented_polyhedron(np, L);
    CHECK(nr.vertices().front() == pt(2, 2));
    CHECK(nr.contains(pt(0, 3)));
    CHECK(np.edges().back().left == nr.edges().front().left);
    CHECK(np.edges().back().right == nr.edges().front().right);
}

TEST_CASE("augmented polyhedron contains the original and agrees right of the touching point") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        PuiseuxPoly p;
        for (int k = 0; k < 4; ++k)
            p.add_term(Exponent2(Rational(static_cast<long long>(rng() % 12)), Rational(1 + static_cast<long long>(rng() % 6))), 1);
        p.add_term(Exponent2(Rational(12 + static_cast<long long>(rng() % 6)), 0), 1);
        NewtonPolyhedron np = newton_polyhedron(p);
        Rational m(2 + static_cast<long long>(rng() % 3));
        Weight L = supporting_weight(np, m);
        NewtonPolyhedron nr = augmented_polyhedron(np, L);
        Rational a_plus = nr.vertices().front().t1;
        CHECK(L.degree(nr.vertices().front()) == 1);
        for (int i = 0; i < 40; ++i) {
            Point2 t{Rational(static_cast<long long>(rng() % 80), 4), Rational(static_cast<long long>(rng() % 40), 4)};
            if (np.contains(t)) CHECK(nr.contains(t));
            if (t.t1 >= a_plus) CHECK(np.contains(t) == nr.contains(t));
            if (nr.contains(t)) CHECK(L.degree(t) >= 1);
        }
        CHECK(r_height(nr, m) >= L.distance());
    }
}
