#pragma once

#include "latticecf/graphs.hpp"
#include "latticecf/integer.hpp"
#include "latticecf/lattice.hpp"

#include <string>
#include <vector>

namespace latticecf {

// Hirzebruch-Jung singularity A_{p,q}, 1 <= q < p, gcd(p,q) = 1.
struct HJType {
    Integer p;
    Integer q;

    friend bool operator==(const HJType&, const HJType&) = default;
};

// Throws DomainError.
void check_type(const HJType& t);

// Chain with weights -alpha_1..-alpha_r, p/q = [alpha_1..alpha_r]^-.
WeightedDualGraph hj_resolution(const HJType& t);

// 3 + sum(alpha_i - 2).
Integer embdim(const HJType& t);
// Counts the minimal generators of the dual semigroup by enumeration in the
// box [0,2p]^2. Throws DomainError for p beyond brute-force range.
Integer embdim_oracle(const HJType& t);

// Cone types between consecutive points among A_1, V_1, ..., V_s, A_r; the
// regular type (1,0) stands for a smooth point.
std::vector<ConeNF> blowup_types(const HJType& t);

// "smooth", "A_n" for (n+1, n), otherwise "A_{p,q}".
std::string type_name(const ConeNF& c);

struct LensSpace {
    Integer p;
    Integer q;

    friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

void check_lens(const LensSpace& l);
bool lens_oriented_equal(const LensSpace& a, const LensSpace& b);
LensSpace lens_reverse(const LensSpace& a);
// a is diffeomorphic to b by an orientation-reversing map.
bool lens_reversing_equal(const LensSpace& a, const LensSpace& b);

// Cyclic weight sequence, all >= 2 and at least one >= 3, kept in its
// lexicographically minimal rotation.
class CuspCycle {
public:
    // Throws InvalidCycle.
    explicit CuspCycle(IntSeq weights);

    const IntSeq& weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }
    std::string str() const;

    friend bool operator==(const CuspCycle&, const CuspCycle&) = default;

private:
    IntSeq weights_;
};

IntSeq minimal_rotation(const IntSeq& seq);

// Product of [[0,-1],[1,alpha]] over one period.
UnimodularMap cusp_monodromy(const CuspCycle& c);
// Z^-(e_1..e_r) - Z^-(e_2..e_{r-1}). Throws CycleTooShort for length 1.
Integer cusp_trace_formula(const CuspCycle& c);
CuspCycle cusp_dual(const CuspCycle& c);

// Embedded resolution graph of x^p = y^q, 2 <= q < p, gcd(p,q) = 1. Vertices
// are stored in creation order with labels E1..EN; the arrow marks the strict
// transform. Throws DomainError.
WeightedDualGraph resolve_monomial(const Integer& p, const Integer& q);
// Same graph obtained by simulating the point blow-ups.
WeightedDualGraph blowup_oracle(const Integer& p, const Integer& q);

} // namespace latticecf
