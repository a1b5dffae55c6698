// State constructions for the targeting game on a d-level pair: the
// computational basis, its Fourier partner (mutually unbiased), the d^2
// equidistant intermediate states between members of the two bases, the
// maximally entangled state, and the projection vector Alice measures to
// steer Bob onto a chosen intermediate state.

#pragma once

#include <vector>

#include "qstbell/linalg.hpp"

namespace qstbell {

// Supported qudit dimensions.  The exhaustive checks downstream (eigensolver
// on d^2 x d^2 operators, strategy enumeration) are sized for this range.
constexpr int kMinDim = 2;
constexpr int kMaxDim = 6;

void check_dim(int d);

enum class BasisLabel { A, APrime, Other };

// Which of the two measurement bases a target state (or Bob's measurement)
// lives in.
enum class BobBasis { A, APrime };

inline BobBasis other_basis(BobBasis b) {
    return b == BobBasis::A ? BobBasis::APrime : BobBasis::A;
}

// A target set names one state from each basis: the k-th computational
// vector and the l-th Fourier vector.
struct TargetSet {
    int k = 0;
    int l = 0;
};

class OrthonormalBasis {
public:
    OrthonormalBasis(BasisLabel label, std::vector<StateVector> vectors,
                     double orthonormality_tol = Tolerances{}.normalization);

    int dim() const { return static_cast<int>(vectors_.size()); }
    BasisLabel label() const { return label_; }
    const StateVector& vector(int i) const;

private:
    BasisLabel label_;
    std::vector<StateVector> vectors_;
};

OrthonormalBasis computational_basis(int d);

// Fourier transform of the computational basis; unbiased against it with
// overlap magnitude 1/sqrt(d) everywhere.
OrthonormalBasis fourier_basis(int d);

// Normalized phase-aligned superposition of two states, equidistant from
// both: the Born weight of each input under the result is (1+|<p1|p2>|)/2.
// Exactly opposite vectors are rejected as degenerate.
StateVector intermediate(const StateVector& psi1, const StateVector& psi2);

// Normalizer N = 2(1 + 1/sqrt(d)) shared by every grid intermediate state.
double intermediate_normalizer(int d);

// Intermediate state of the k-th computational and l-th Fourier vector.
StateVector grid_intermediate(int d, int k, int l);

// All d^2 grid intermediates, built once and validated.
class IntermediateGrid {
public:
    explicit IntermediateGrid(int d);

    int dim() const { return d_; }
    double normalizer() const { return normalizer_; }
    const StateVector& at(int k, int l) const;

private:
    int d_;
    double normalizer_;
    std::vector<StateVector> states_; // row-major over (k, l)
};

// (1/sqrt(d)) sum_k |a_k> (x) |a_k>, Alice's subsystem first.
StateVector max_entangled(int d);

// The vector Alice projects her half onto so that, when the projection
// fires (probability exactly 1/d on the maximally entangled state), Bob's
// half collapses onto the intermediate state of target set t.  This is the
// computational-basis conjugate of that intermediate state; the conjugation
// absorbs the Fourier-basis anticorrelation of the entangled pair.
StateVector steering_vector(int d, const TargetSet& t);

} // namespace qstbell
