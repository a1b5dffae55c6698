// Dense complex vectors and Hermitian operators at qudit scale, plus the
// Born-rule helpers everything above is built from.  Dimensions stay tiny
// (<= 36 for operators), so storage is plain row-major std::vector and the
// eigensolver is a cyclic complex Jacobi sweep.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qstbell/rng.hpp"

namespace qstbell {

using Complex = std::complex<double>;

// Default numeric tolerances; callers can pass their own where a routine
// accepts one.
struct Tolerances {
    double normalization = 1e-10;
    double hermiticity = 1e-12;
    double eigen_residual = 1e-8;
};

// Finite-dimensional pure state / measurement-effect vector.  Not forced to
// unit norm: intermediate construction and projections produce subnormalized
// vectors on purpose.  Amplitudes are validated finite at construction and
// the value is immutable afterwards.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::vector<Complex> amps);

    static StateVector zero(int dim);
    static StateVector basis_state(int dim, int index);

    int dim() const { return static_cast<int>(amps_.size()); }
    const Complex& operator[](int i) const { return amps_[static_cast<std::size_t>(i)]; }
    const std::vector<Complex>& amps() const { return amps_; }

    double norm_sq() const;
    double norm() const;

    // Unit-norm copy; zero vector is rejected as degenerate.
    StateVector normalized() const;

private:
    std::vector<Complex> amps_;
};

// <u|v>, conjugate-linear in u.
Complex inner(const StateVector& u, const StateVector& v);

// |<u|v>|^2, the phase-invariant comparison used throughout the tests.
double fidelity(const StateVector& u, const StateVector& v);

// Kronecker product, first factor slowest (Alice's subsystem first).
// Product dimension above the cap is rejected as a capacity error.
StateVector tensor(const StateVector& u, const StateVector& v, int dim_cap = 64);

// Componentwise complex conjugate in the computational basis.  Exact:
// applying it twice gives back the input bit for bit.
StateVector conj_in_computational(const StateVector& v);

// Joint probability |<effect_a (x) outcome_b | state>|^2 on a bipartite
// state, without materializing the tensor product.
double born_joint(const StateVector& state, const StateVector& effect_a,
                  const StateVector& outcome_b);

// Rescale by a global phase so the first nonzero amplitude is real and >= 0.
StateVector canonical_phase(const StateVector& v);

// Haar-ish random unit vector (complex Gaussian amplitudes, normalized).
StateVector random_unit_state(int dim, RngStream& stream);

// Hermitian matrix, row-major.  Hermiticity is validated at construction.
class HermitianOperator {
public:
    static HermitianOperator zero(int dim);
    static HermitianOperator identity(int dim);
    static HermitianOperator projector(const StateVector& v);
    static HermitianOperator from_entries(int dim, std::vector<Complex> entries,
                                          double hermiticity_tol = Tolerances{}.hermiticity);

    int dim() const { return dim_; }
    const Complex& entry(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * dim_ + j];
    }
    const std::vector<Complex>& entries() const { return entries_; }

    StateVector apply(const StateVector& v) const;
    double expectation(const StateVector& v) const; // <v|H|v>, real part
    Complex trace() const;

private:
    HermitianOperator(int dim, std::vector<Complex> entries)
        : dim_(dim), entries_(std::move(entries)) {}

    int dim_ = 0;
    std::vector<Complex> entries_;
};

HermitianOperator add(const HermitianOperator& a, const HermitianOperator& b);
HermitianOperator scale(double factor, const HermitianOperator& a);
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

struct EigenDecomposition {
    std::vector<double> eigenvalues;        // descending
    std::vector<StateVector> eigenvectors;  // same order, orthonormal,
                                            // first nonzero amplitude real >= 0
};

struct JacobiOptions {
    double offdiag_target = 1e-12; // off-diagonal Frobenius norm to reach
    int max_sweeps = 100;
    double hermiticity_tol = Tolerances{}.hermiticity;
};

// Full spectrum of a Hermitian matrix via cyclic complex Jacobi rotations.
EigenDecomposition hermitian_eigs(const HermitianOperator& h,
                                  const JacobiOptions& opts = {});

} // namespace qstbell
