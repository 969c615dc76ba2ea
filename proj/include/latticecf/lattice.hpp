#pragma once

// Plane lattice cones and the boundary polygon P(sigma) of the convex hull of
// their nonzero lattice points.
//
// Orientation: the plane is turned from the first ray l- towards the second
// ray l+ inside the cone. Normal coordinates of a non-regular cone of type
// (p,q) are those of a basis (A0, A1) with A0 on l- and
//     A+ = -q*A0 + p*A1,   0 < q < p.
// In these coordinates A0 = (1,0), A1 = (0,1), A+ = (-q,p).

#include "latticecf/integer.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace latticecf {

struct Vec2 {
    Integer x;
    Integer y;

    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const Integer& k, const Vec2& v) { return {k * v.x, k * v.y}; }
    Vec2 operator-() const { return {-x, -y}; }

    bool is_zero() const { return x == 0 && y == 0; }
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Vec2& v);

Integer det(const Vec2& a, const Vec2& b);

// v / gcd(v.x, v.y). Throws ZeroVector.
Vec2 primitive(const Vec2& v);

// Number of unit lattice steps on the segment [a,b]. Throws ZeroVector if a == b.
Integer integral_length(const Vec2& a, const Vec2& b);

// [[a,b],[c,d]] acting on column vectors.
struct UnimodularMap {
    Integer a = 1, b = 0, c = 0, d = 1;

    Vec2 operator()(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Integer det() const { return a * d - b * c; }
    UnimodularMap inverse() const;

    friend UnimodularMap operator*(const UnimodularMap& l, const UnimodularMap& r);
    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

struct ConeNF {
    Integer p = 1;
    Integer q = 0;

    bool regular() const { return p == 1; }
    std::string str() const;

    friend bool operator==(const ConeNF&, const ConeNF&) = default;
};

// Points A_0..A_{r+1}; weights alpha_1..alpha_r with A_{n-1} + A_{n+1} = alpha_n A_n.
struct ConePolygon {
    std::vector<Vec2> points;
    IntSeq weights;
    std::vector<std::size_t> vertex_indices;

    std::vector<Vec2> vertices() const;

    friend bool operator==(const ConePolygon&, const ConePolygon&) = default;
};

struct NormalForm {
    ConeNF type;
    // Original coordinates -> normal coordinates.
    UnimodularMap map;
};

// Throws ZeroVector, DegenerateCone (proportional rays).
NormalForm cone_normal_form(const Vec2& u_minus, const Vec2& u_plus);

// Throws RegularCone for (1,0) and DomainError for pairs that are not a normal form.
void check_cone(const ConeNF& c);

// P(sigma) in normal coordinates, generated by the HJ expansion of p/q.
ConePolygon polygon(const ConeNF& c);

// P(sigma) in normal coordinates by direct convex-hull search over lattice points.
ConePolygon hull_oracle(const ConeNF& c);

ConePolygon transform(const ConePolygon& poly, const UnimodularMap& m);

// P(sigma) of cone(u_minus, u_plus) in the original coordinates.
ConePolygon polygon_of_rays(const Vec2& u_minus, const Vec2& u_plus);

struct Supplementary {
    ConeNF type;
    // sigma-normal coordinates -> sigma'-normal coordinates, from
    // A0' = -A0, A1' = A1 - A0. It is its own inverse.
    UnimodularMap map;
};

Supplementary supplementary(const ConeNF& c);

enum class EdgeKind { half_line_minus, compact, half_line_plus };

struct DualityPair {
    EdgeKind kind;
    // Indices into the points of P(sigma); both equal for half-lines.
    std::size_t from;
    std::size_t to;
    Integer length;               // 0 for half-lines
    Vec2 image;                   // sigma-normal coordinates
    std::size_t image_index;      // index into P(sigma') points, or npos
    bool image_is_vertex;
};

struct DualityReport {
    ConeNF type;
    ConeNF dual_type;
    ConePolygon polygon;       // sigma-normal coordinates
    ConePolygon dual_polygon;  // sigma-normal coordinates
    std::vector<DualityPair> pairs;

    bool image_on_dual_polygon = false;   // Im(I) inside P(sigma') and L
    bool dual_vertices_in_image = false;  // V(sigma') inside Im(I)
    bool order_preserved = false;
    bool exceptional_ok = false;
    bool vertex_sets_equal = false;

    bool ok() const {
        return image_on_dual_polygon && dual_vertices_in_image && order_preserved && exceptional_ok &&
               vertex_sets_equal;
    }
};

DualityReport duality_map(const ConeNF& c);

// Normal form of the dual cone, built from inward normals of the edges.
ConeNF dual_cone(const ConeNF& c);

// E partial quotients of p/q read off the polygons of cone((1,0),(q,p)) and
// cone((0,1),(q,p)). Throws DomainError unless 1 <= q < p, gcd(p,q) = 1.
IntSeq klein_quotients(const Integer& p, const Integer& q);

std::string_view to_string(EdgeKind kind) noexcept;

} // namespace latticecf
