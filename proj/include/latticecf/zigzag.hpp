#pragma once

// Zigzag diagram ZZ(lambda) for rational lambda > 1.
//
// With lambda = [(2)^{m_1}, n_1+3, ..., n_s+3, (2)^{m_{s+1}}]^- the right side
// is P(sigma) traced from A- to A+ and the left side is P(sigma') traced from
// A-' to A+. The zigzag runs A- V_1' V_1 V_2' V_2 ... V_s V_{s+1}' A+.

#include "latticecf/cf.hpp"
#include "latticecf/rational.hpp"

#include <string>

namespace latticecf {

struct ZigzagSide {
    // Integral lengths of consecutive edges between marked points.
    IntSeq edge_lengths;
    // Weights of the marked points strictly between the two ends.
    IntSeq vertex_weights;

    friend bool operator==(const ZigzagSide&, const ZigzagSide&) = default;
};

struct ZigzagDiagram {
    Rational lambda;
    HJBlocks blocks;
    // edges [A- V_1], [V_1 V_2], ..., [V_s A+]; weights of V_1..V_s.
    ZigzagSide right;
    // edges [A-' V_1'], [V_1' V_2'], ..., [V_{s+1}' A+]; weights of V_1'..V_{s+1}'.
    ZigzagSide left;
    // Whether V_1' and V_{s+1}' are vertices of P(sigma').
    bool first_end_vertex = false;
    bool last_end_vertex = false;

    std::size_t s() const noexcept { return blocks.s(); }
};

enum class Reading { hj_lambda, hj_involute, e_involute, e_lambda };

std::string_view to_string(Reading r) noexcept;

// Throws DomainError unless lambda > 1.
ZigzagDiagram build_zigzag(const Rational& lambda);

CFExpansion read(const ZigzagDiagram& d, Reading which);

// Each vertex weight equals the length of the opposite edge plus the number
// of that edge's endpoints other than A-, A-', A+.
bool satisfies_rule(const ZigzagDiagram& d);

std::string render_ascii(const ZigzagDiagram& d);
std::string render_svg(const ZigzagDiagram& d);

} // namespace latticecf
