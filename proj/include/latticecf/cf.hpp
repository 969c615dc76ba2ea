#pragma once

// Continued-fraction algebra over exact integers.
//
//   [x1,...,xn]^+ = x1 + 1/(x2 + 1/(... + 1/xn))   Euclidean (E) kind
//   [x1,...,xn]^- = x1 - 1/(x2 - 1/(... - 1/xn))   Hirzebruch-Jung (HJ) kind
//
// E sequences: first term any integer, later terms >= 1.
// HJ sequences: first term any integer, later terms >= 2.

#include "latticecf/integer.hpp"
#include "latticecf/rational.hpp"

#include <cstddef>
#include <span>
#include <string>

namespace latticecf {

enum class Sign { plus, minus };
enum class CFKind { e, hj };

std::string_view to_string(CFKind kind) noexcept;

struct CFExpansion {
    CFKind kind = CFKind::e;
    IntSeq terms;

    friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

// Eventually periodic stream preperiod, period, period, ...
// Construction through normalized() yields the unique normal form: primitive
// period, then shortest preperiod.
struct PeriodicCF {
    CFKind kind = CFKind::e;
    IntSeq preperiod;
    IntSeq period;

    static PeriodicCF normalized(CFKind kind, IntSeq preperiod, IntSeq period);

    // First n terms of the stream.
    IntSeq prefix(std::size_t n) const;

    friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;
};

// Riemenschneider point diagram: row k holds alpha_k - 1 points, and the first
// point of row k+1 sits under the last point of row k.
struct Staircase {
    IntSeq rows;

    // Column index of the first point in each row.
    IntSeq offsets() const;
    // One line per row, '*' for points, two characters per column.
    std::string render() const;

    friend bool operator==(const Staircase&, const Staircase&) = default;
};

// lambda = [(2)^{m_1}, n_1+3, (2)^{m_2}, ..., n_s+3, (2)^{m_{s+1}}]^-
// twos = (m_1..m_{s+1}), bumps = (n_1..n_s); twos.size() == bumps.size() + 1.
struct HJBlocks {
    IntSeq twos;
    IntSeq bumps;

    std::size_t s() const noexcept { return bumps.size(); }

    friend bool operator==(const HJBlocks&, const HJBlocks&) = default;
};

Integer continuant(Sign sign, std::span<const Integer> terms);

Rational eval(const CFExpansion& cf);

CFExpansion expand_e(const Rational& x);
CFExpansion expand_hj(const Rational& x);

// Applies id1 ([..., a, 1]^+ = [..., a+1]^+) until the last term is not 1.
IntSeq canonical_e(IntSeq terms);

IntSeq e_to_hj(std::span<const Integer> terms);
IntSeq hj_to_e(std::span<const Integer> terms);

PeriodicCF e_to_hj_periodic(const PeriodicCF& x);

// lambda -> lambda / (lambda - 1), for lambda > 1.
Rational involute(const Rational& x);
IntSeq involute_e(std::span<const Integer> terms);
IntSeq involute_hj(std::span<const Integer> terms);

Staircase staircase(std::span<const Integer> terms);
IntSeq staircase_dual(const Staircase& s);

struct ReversedHJ {
    IntSeq terms;
    Rational value;
};

// Reversal of the HJ expansion of p/q; its value is p/qbar with q*qbar = 1 mod p.
ReversedHJ reverse_hj(const Integer& p, const Integer& q);

// Greedy left-to-right block decomposition of an HJ sequence with all terms >= 2.
HJBlocks hj_blocks(std::span<const Integer> terms);
IntSeq from_blocks(const HJBlocks& blocks);

} // namespace latticecf
