#pragma once
// Newton polyhedra of Puiseux polynomials: exact hulls, faces, distances, weights.

#include "sr/puiseux.hpp"
#include "sr/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sr {

// A point of the (t1,t2)-plane. Unlike Exponent2 it may leave the quadrant,
// which happens on the half-line of an augmented polyhedron.
struct Point2 {
    Rational t1, t2;
    friend bool operator==(const Point2&, const Point2&) = default;
    std::string str() const { return "(" + t1.str() + "," + t2.str() + ")"; }
};

inline Point2 to_point(const Exponent2& e) { return {e.e1, e.e2}; }

// kappa with kappa.t = 1 on the supporting line. Both components positive.
struct Weight {
    Rational k1, k2;

    Weight(Rational a, Rational b);
    Rational m() const { return k2 / k1; }
    Rational norm() const { return k1 + k2; }
    Rational degree(const Point2& t) const { return k1 * t.t1 + k2 * t.t2; }
    Rational degree(const Exponent2& t) const { return k1 * t.e1 + k2 * t.e2; }
    // Coordinate d of the point (d,d) on the line.
    Rational distance() const { return Rational(1) / norm(); }
    friend bool operator==(const Weight&, const Weight&) = default;
    std::string str() const { return "(" + k1.str() + "," + k2.str() + ")"; }
};

struct Edge {
    Point2 left, right;  // left.t1 < right.t1, left.t2 > right.t2
    Weight weight;
};

class NoFiniteWeight : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NewtonPolyhedron {
public:
    // Hull of the points plus the positive quadrant. Throws on an empty set.
    static NewtonPolyhedron from_points(std::vector<Point2> pts);

    const std::vector<Point2>& vertices() const { return vertices_; }  // increasing t1
    const std::vector<Edge>& edges() const { return edges_; }          // compact edges, left to right
    // Unbounded directions at the first and the last vertex. The left one is
    // (0,1) for an ordinary Newton polyhedron and runs along L for the augmented one.
    const Point2& left_ray() const { return left_ray_; }
    const Point2& right_ray() const { return right_ray_; }

    bool contains(const Point2& t) const;

    // Constraint n.t >= c; every boundary piece contributes one.
    struct HalfPlane {
        Rational n1, n2, c;
        int piece;  // -1 left ray, edges 0..E-1, E right ray
    };
    std::vector<HalfPlane> half_planes() const;

private:
    friend NewtonPolyhedron augmented_polyhedron(const NewtonPolyhedron&, const Weight&);
    std::vector<Point2> vertices_;
    std::vector<Edge> edges_;
    Point2 left_ray_{0, 1};
    Point2 right_ray_{1, 0};
};

NewtonPolyhedron newton_polyhedron(const PuiseuxPoly& p);

enum class FaceKind { vertex, edge };

struct Face {
    FaceKind kind = FaceKind::vertex;
    std::vector<Point2> points;       // one vertex, or the two ends / the start of a ray
    std::optional<Point2> direction;  // set for an unbounded edge
    std::optional<Weight> weight;     // set for a compact edge
    bool compact() const { return kind == FaceKind::vertex || !direction; }
};

// Where the line p0 + s(1,1) enters the polyhedron.
struct DiagonalHit {
    Rational s;
    Point2 point;
    Face face;  // minimal face containing the point; vertex on ties
};
DiagonalHit diagonal_hit(const NewtonPolyhedron& np, const Point2& p0);

Face principal_face(const NewtonPolyhedron& np);
Rational newton_distance(const NewtonPolyhedron& np);
// Throws NoFiniteWeight for vertices and axis-parallel or unbounded edges.
Weight principal_weight(const Face& face);

PuiseuxPoly kappa_principal_part(const PuiseuxPoly& p, const Weight& w);
bool is_kappa_homogeneous(const PuiseuxPoly& p, const Weight& w);  // all terms of degree 1

// Multiplies the coefficient of x^t by r^{kappa.t}. Throws std::domain_error if
// some power is irrational.
PuiseuxPoly dilate(const PuiseuxPoly& p, const Weight& w, const Rational& r);

// The line of slope 1/m (t1 + m t2 = const) supporting the polyhedron.
Weight supporting_weight(const NewtonPolyhedron& np, const Rational& m);

// Hull of np with the half-line L+ on the supporting line given by w: the ray
// starts at the rightmost point of L on np and runs up-left along L.
// Throws std::invalid_argument if L does not support np.
NewtonPolyhedron augmented_polyhedron(const NewtonPolyhedron& np, const Weight& w);

// The line Delta^(m) = {(t, t+m+1)} enters np_r at a point whose second
// coordinate is h^r + 1. Returns h^r.
Rational r_height(const NewtonPolyhedron& np_r, const Rational& m);

}  // namespace sr
