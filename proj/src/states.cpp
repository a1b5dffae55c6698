#include "qstbell/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qstbell {

void check_dim(int d) {
    if (d < kMinDim)
        throw std::invalid_argument("dimension must be >= " + std::to_string(kMinDim) +
                                    ", got " + std::to_string(d));
    if (d > kMaxDim)
        throw std::invalid_argument("dimension must be <= " + std::to_string(kMaxDim) +
                                    ", got " + std::to_string(d));
}

namespace {

void check_grid_index(int d, int k, int l) {
    if (k < 0 || k >= d || l < 0 || l >= d)
        throw std::invalid_argument("grid index (" + std::to_string(k) + "," +
                                    std::to_string(l) + ") out of range for d=" +
                                    std::to_string(d));
}

} // namespace

OrthonormalBasis::OrthonormalBasis(BasisLabel label, std::vector<StateVector> vectors,
                                   double orthonormality_tol)
    : label_(label), vectors_(std::move(vectors)) {
    const int n = dim();
    if (n < 1) throw std::invalid_argument("OrthonormalBasis: no vectors");
    for (int i = 0; i < n; ++i) {
        if (vectors_[static_cast<std::size_t>(i)].dim() != n)
            throw std::invalid_argument("OrthonormalBasis: vector dim does not match count");
        for (int j = i; j < n; ++j) {
            const Complex ov = inner(vectors_[static_cast<std::size_t>(i)],
                                     vectors_[static_cast<std::size_t>(j)]);
            const double want = i == j ? 1.0 : 0.0;
            if (std::abs(ov - want) > orthonormality_tol)
                throw std::invalid_argument("OrthonormalBasis: vectors not orthonormal within tolerance");
        }
    }
}

const StateVector& OrthonormalBasis::vector(int i) const {
    if (i < 0 || i >= dim())
        throw std::invalid_argument("OrthonormalBasis::vector: index out of range");
    return vectors_[static_cast<std::size_t>(i)];
}

OrthonormalBasis computational_basis(int d) {
    check_dim(d);
    std::vector<StateVector> vecs;
    vecs.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) vecs.push_back(StateVector::basis_state(d, i));
    return OrthonormalBasis(BasisLabel::A, std::move(vecs));
}

OrthonormalBasis fourier_basis(int d) {
    check_dim(d);
    const double root = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<StateVector> vecs;
    vecs.reserve(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) {
        std::vector<Complex> amps(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) {
            const double ang = 2.0 * std::numbers::pi * ((k * l) % d) / d;
            amps[static_cast<std::size_t>(k)] = root * Complex(std::cos(ang), std::sin(ang));
        }
        vecs.push_back(StateVector(std::move(amps)));
    }
    return OrthonormalBasis(BasisLabel::APrime, std::move(vecs));
}

StateVector intermediate(const StateVector& psi1, const StateVector& psi2) {
    if (psi1.dim() != psi2.dim())
        throw std::invalid_argument("intermediate: dimension mismatch");

    // reject exactly opposite inputs: their plain superposition vanishes
    double diff = 0.0;
    for (int i = 0; i < psi1.dim(); ++i) diff += std::norm(psi1[i] + psi2[i]);
    if (diff < 1e-24)
        throw std::invalid_argument("intermediate: psi2 = -psi1 is degenerate");

    const Complex ov = inner(psi1, psi2);
    const double mag = std::abs(ov);
    // phase alignment; for (numerically) orthogonal inputs the phase is
    // immaterial and fixed to zero
    const Complex align = mag > 1e-12 ? std::conj(ov) / mag : Complex(1.0, 0.0);
    const double norm_const = std::sqrt(2.0 * (1.0 + mag));

    std::vector<Complex> amps(static_cast<std::size_t>(psi1.dim()));
    for (int i = 0; i < psi1.dim(); ++i)
        amps[static_cast<std::size_t>(i)] = (psi1[i] + align * psi2[i]) / norm_const;
    return StateVector(std::move(amps));
}

double intermediate_normalizer(int d) {
    check_dim(d);
    return 2.0 * (1.0 + 1.0 / std::sqrt(static_cast<double>(d)));
}

StateVector grid_intermediate(int d, int k, int l) {
    check_dim(d);
    check_grid_index(d, k, l);
    const OrthonormalBasis aprime = fourier_basis(d);
    const double root_n = std::sqrt(intermediate_normalizer(d));
    // the aligning phase for <a_k|a'_l> = e^{2 pi i kl/d}/sqrt(d)
    const double ang = -2.0 * std::numbers::pi * ((k * l) % d) / d;
    const Complex align(std::cos(ang), std::sin(ang));

    std::vector<Complex> amps(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) amps[static_cast<std::size_t>(i)] = align * aprime.vector(l)[i];
    amps[static_cast<std::size_t>(k)] += 1.0;
    for (Complex& a : amps) a /= root_n;
    return StateVector(std::move(amps));
}

IntermediateGrid::IntermediateGrid(int d)
    : d_(d), normalizer_(intermediate_normalizer(d)) {
    states_.reserve(static_cast<std::size_t>(d) * d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            StateVector m = grid_intermediate(d, k, l);
            if (std::abs(m.norm_sq() - 1.0) > Tolerances{}.normalization)
                throw std::runtime_error("IntermediateGrid: state not normalized");
            states_.push_back(std::move(m));
        }
}

const StateVector& IntermediateGrid::at(int k, int l) const {
    check_grid_index(d_, k, l);
    return states_[static_cast<std::size_t>(k) * d_ + l];
}

StateVector max_entangled(int d) {
    check_dim(d);
    const double root = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Complex> amps(static_cast<std::size_t>(d) * d);
    for (int k = 0; k < d; ++k)
        amps[static_cast<std::size_t>(k) * d + k] = root;
    return StateVector(std::move(amps));
}

StateVector steering_vector(int d, const TargetSet& t) {
    check_dim(d);
    check_grid_index(d, t.k, t.l);
    return conj_in_computational(grid_intermediate(d, t.k, t.l));
}

} // namespace qstbell
