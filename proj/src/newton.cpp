#include "sr/newton.hpp"

#include <algorithm>

namespace sr {

Weight::Weight(Rational a, Rational b) : k1(std::move(a)), k2(std::move(b)) {
    if (k1.sign() <= 0 || k2.sign() <= 0) throw NoFiniteWeight("weight components must be positive");
}

namespace {
Rational cross(const Point2& a, const Point2& b, const Point2& c) {
    return (b.t1 - a.t1) * (c.t2 - a.t2) - (b.t2 - a.t2) * (c.t1 - a.t1);
}

Weight line_weight(const Point2& a, const Point2& b) {
    Rational det = a.t1 * b.t2 - a.t2 * b.t1;
    if (det.is_zero()) throw NoFiniteWeight("edge through the origin has no weight");
    return Weight((b.t2 - a.t2) / det, (a.t1 - b.t1) / det);
}
}  // namespace

NewtonPolyhedron NewtonPolyhedron::from_points(std::vector<Point2> pts) {
    if (pts.empty()) throw std::invalid_argument("Newton polyhedron of the zero polynomial");
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.t1 != b.t1 ? a.t1 < b.t1 : a.t2 < b.t2;
    });
    // Pareto-minimal points: t2 strictly decreasing as t1 increases.
    std::vector<Point2> stair;
    for (const auto& p : pts)
        if (stair.empty() || p.t2 < stair.back().t2) stair.push_back(p);
    // Lower-left convex chain; collinear middle points are dropped.
    std::vector<Point2> hull;
    for (const auto& p : stair) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p).sign() <= 0) hull.pop_back();
        hull.push_back(p);
    }
    NewtonPolyhedron np;
    np.vertices_ = hull;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i)
        np.edges_.push_back({hull[i], hull[i + 1], line_weight(hull[i], hull[i + 1])});
    return np;
}

NewtonPolyhedron newton_polyhedron(const PuiseuxPoly& p) {
    std::vector<Point2> pts;
    for (const auto& e : p.support()) pts.push_back(to_point(e));
    return NewtonPolyhedron::from_points(std::move(pts));
}

std::vector<NewtonPolyhedron::HalfPlane> NewtonPolyhedron::half_planes() const {
    std::vector<HalfPlane> hp;
    const Point2& first = vertices_.front();
    const Point2& last = vertices_.back();
    {
        Rational n1 = left_ray_.t2, n2 = -left_ray_.t1;
        hp.push_back({n1, n2, n1 * first.t1 + n2 * first.t2, -1});
    }
    for (std::size_t i = 0; i < edges_.size(); ++i)
        hp.push_back({edges_[i].weight.k1, edges_[i].weight.k2, Rational(1), static_cast<int>(i)});
    {
        Rational n1 = -right_ray_.t2, n2 = right_ray_.t1;
        hp.push_back({n1, n2, n1 * last.t1 + n2 * last.t2, static_cast<int>(edges_.size())});
    }
    return hp;
}

bool NewtonPolyhedron::contains(const Point2& t) const {
    for (const auto& h : half_planes())
        if (h.n1 * t.t1 + h.n2 * t.t2 < h.c) return false;
    return true;
}

DiagonalHit diagonal_hit(const NewtonPolyhedron& np, const Point2& p0) {
    auto hps = np.half_planes();
    std::vector<Rational> s(hps.size());
    Rational best;
    for (std::size_t i = 0; i < hps.size(); ++i) {
        const auto& h = hps[i];
        Rational denom = h.n1 + h.n2;
        if (denom.sign() <= 0) throw std::logic_error("diagonal parallel to a boundary piece");
        s[i] = (h.c - h.n1 * p0.t1 - h.n2 * p0.t2) / denom;
        if (i == 0 || s[i] > best) best = s[i];
    }
    std::vector<int> active;
    for (std::size_t i = 0; i < hps.size(); ++i)
        if (s[i] == best) active.push_back(hps[i].piece);

    DiagonalHit hit{best, {p0.t1 + best, p0.t2 + best}, {}};
    const auto& V = np.vertices();
    const auto& E = np.edges();
    int nE = static_cast<int>(E.size());
    if (active.size() >= 2) {
        // Adjacent pieces i and i+1 meet at vertex i+1.
        hit.face.kind = FaceKind::vertex;
        hit.face.points = {V[static_cast<std::size_t>(active.front() + 1)]};
    } else if (int piece = active.front(); piece >= 0 && piece < nE) {
        hit.face.kind = FaceKind::edge;
        hit.face.points = {E[static_cast<std::size_t>(piece)].left, E[static_cast<std::size_t>(piece)].right};
        hit.face.weight = E[static_cast<std::size_t>(piece)].weight;
    } else {
        hit.face.kind = FaceKind::edge;
        hit.face.points = {piece < 0 ? V.front() : V.back()};
        hit.face.direction = piece < 0 ? np.left_ray() : np.right_ray();
    }
    return hit;
}

Face principal_face(const NewtonPolyhedron& np) { return diagonal_hit(np, {0, 0}).face; }

Rational newton_distance(const NewtonPolyhedron& np) { return diagonal_hit(np, {0, 0}).s; }

Weight principal_weight(const Face& face) {
    if (face.kind == FaceKind::vertex) throw NoFiniteWeight("principal face is a vertex");
    if (face.direction) throw NoFiniteWeight("principal face is an unbounded edge");
    if (face.weight) return *face.weight;
    return line_weight(face.points.at(0), face.points.at(1));
}

PuiseuxPoly kappa_principal_part(const PuiseuxPoly& p, const Weight& w) {
    PuiseuxPoly r;
    for (const auto& [e, c] : p.terms())
        if (w.degree(e) == Rational(1)) r.add_term(e, c);
    return r;
}

bool is_kappa_homogeneous(const PuiseuxPoly& p, const Weight& w) {
    for (const auto& [e, c] : p.terms())
        if (w.degree(e) != Rational(1)) return false;
    return true;
}

PuiseuxPoly dilate(const PuiseuxPoly& p, const Weight& w, const Rational& r) {
    if (r.sign() <= 0) throw std::domain_error("dilation factor must be positive");
    PuiseuxPoly out;
    for (const auto& [e, c] : p.terms()) {
        auto f = r.exact_pow(w.degree(e));
        if (!f) throw std::domain_error(r.str() + "^" + w.degree(e).str() + " is not rational");
        out.add_term(e, c * *f);
    }
    return out;
}

Weight supporting_weight(const NewtonPolyhedron& np, const Rational& m) {
    if (m.sign() <= 0) throw std::invalid_argument("slope parameter m must be positive");
    std::optional<Rational> c;
    for (const auto& v : np.vertices()) {
        Rational val = v.t1 + m * v.t2;
        if (!c || val < *c) c = val;
    }
    if (c->sign() <= 0) throw NoFiniteWeight("polyhedron contains the origin");
    return Weight(Rational(1) / *c, m / *c);
}

NewtonPolyhedron augmented_polyhedron(const NewtonPolyhedron& np, const Weight& w) {
    std::optional<std::size_t> touch;
    for (std::size_t i = 0; i < np.vertices().size(); ++i) {
        Rational d = w.degree(np.vertices()[i]);
        if (d < Rational(1)) throw std::invalid_argument("line " + w.str() + " cuts the polyhedron");
        if (d == Rational(1)) touch = i;  // keeps the rightmost
    }
    auto ray_ok = [&](const Point2& dir) { return w.degree(dir).sign() >= 0; };
    if (!touch || !ray_ok(np.left_ray()) || !ray_ok(np.right_ray()))
        throw std::invalid_argument("line " + w.str() + " does not support the polyhedron");
    NewtonPolyhedron out;
    out.vertices_.assign(np.vertices().begin() + static_cast<std::ptrdiff_t>(*touch), np.vertices().end());
    for (const auto& e : np.edges())
        if (e.left.t1 >= np.vertices()[*touch].t1) out.edges_.push_back(e);
    out.left_ray_ = {-w.k2, w.k1};
    out.right_ray_ = np.right_ray();
    return out;
}

Rational r_height(const NewtonPolyhedron& np_r, const Rational& m) {
    DiagonalHit hit = diagonal_hit(np_r, {0, m + 1});
    return hit.point.t2 - 1;
}

}  // namespace sr
