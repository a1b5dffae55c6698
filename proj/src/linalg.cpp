#include "qstbell/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qstbell {

namespace {

void check_finite(const std::vector<Complex>& amps) {
    for (const Complex& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument("StateVector: non-finite amplitude");
    }
}

void check_same_dim(const StateVector& u, const StateVector& v, const char* op) {
    if (u.dim() != v.dim())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                    std::to_string(u.dim()) + " vs " +
                                    std::to_string(v.dim()) + ")");
}

} // namespace

StateVector::StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {
    check_finite(amps_);
}

StateVector StateVector::zero(int dim) {
    if (dim < 1) throw std::invalid_argument("StateVector::zero: dim must be >= 1");
    return StateVector(std::vector<Complex>(static_cast<std::size_t>(dim)));
}

StateVector StateVector::basis_state(int dim, int index) {
    if (dim < 1) throw std::invalid_argument("StateVector::basis_state: dim must be >= 1");
    if (index < 0 || index >= dim)
        throw std::invalid_argument("StateVector::basis_state: index out of range");
    std::vector<Complex> amps(static_cast<std::size_t>(dim));
    amps[static_cast<std::size_t>(index)] = 1.0;
    return StateVector(std::move(amps));
}

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const Complex& a : amps_) s += std::norm(a);
    return s;
}

double StateVector::norm() const { return std::sqrt(norm_sq()); }

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n < 1e-150)
        throw std::invalid_argument("StateVector::normalized: zero vector is degenerate");
    std::vector<Complex> amps(amps_);
    for (Complex& a : amps) a /= n;
    return StateVector(std::move(amps));
}

Complex inner(const StateVector& u, const StateVector& v) {
    check_same_dim(u, v, "inner");
    Complex s = 0.0;
    for (int i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

double fidelity(const StateVector& u, const StateVector& v) {
    return std::norm(inner(u, v));
}

StateVector tensor(const StateVector& u, const StateVector& v, int dim_cap) {
    const long long prod = static_cast<long long>(u.dim()) * v.dim();
    if (prod > dim_cap)
        throw std::length_error("tensor: product dimension " + std::to_string(prod) +
                                " exceeds cap " + std::to_string(dim_cap));
    std::vector<Complex> amps(static_cast<std::size_t>(prod));
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < v.dim(); ++j)
            amps[static_cast<std::size_t>(i) * v.dim() + j] = u[i] * v[j];
    return StateVector(std::move(amps));
}

StateVector conj_in_computational(const StateVector& v) {
    std::vector<Complex> amps(v.amps());
    for (Complex& a : amps) a = std::conj(a);
    return StateVector(std::move(amps));
}

double born_joint(const StateVector& state, const StateVector& effect_a,
                  const StateVector& outcome_b) {
    const int da = effect_a.dim();
    const int db = outcome_b.dim();
    if (state.dim() != da * db)
        throw std::invalid_argument("born_joint: state dim " + std::to_string(state.dim()) +
                                    " is not " + std::to_string(da) + "*" + std::to_string(db));
    Complex amp = 0.0;
    for (int i = 0; i < da; ++i) {
        Complex row = 0.0;
        for (int j = 0; j < db; ++j)
            row += std::conj(outcome_b[j]) * state[i * db + j];
        amp += std::conj(effect_a[i]) * row;
    }
    return std::norm(amp);
}

StateVector canonical_phase(const StateVector& v) {
    for (int i = 0; i < v.dim(); ++i) {
        const double mag = std::abs(v[i]);
        if (mag > 1e-12) {
            const Complex phase = std::conj(v[i]) / mag;
            std::vector<Complex> amps(v.amps());
            for (Complex& a : amps) a *= phase;
            amps[static_cast<std::size_t>(i)] = Complex(mag, 0.0);
            return StateVector(std::move(amps));
        }
    }
    return v;
}

StateVector random_unit_state(int dim, RngStream& stream) {
    if (dim < 1) throw std::invalid_argument("random_unit_state: dim must be >= 1");
    std::vector<Complex> amps(static_cast<std::size_t>(dim));
    for (Complex& a : amps) {
        const double re = stream.next_gaussian();
        const double im = stream.next_gaussian();
        a = Complex(re, im);
    }
    return StateVector(std::move(amps)).normalized();
}

HermitianOperator HermitianOperator::zero(int dim) {
    if (dim < 1) throw std::invalid_argument("HermitianOperator::zero: dim must be >= 1");
    return HermitianOperator(dim, std::vector<Complex>(static_cast<std::size_t>(dim) * dim));
}

HermitianOperator HermitianOperator::identity(int dim) {
    HermitianOperator h = zero(dim);
    for (int i = 0; i < dim; ++i)
        h.entries_[static_cast<std::size_t>(i) * dim + i] = 1.0;
    return h;
}

HermitianOperator HermitianOperator::projector(const StateVector& v) {
    const int n = v.dim();
    std::vector<Complex> e(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e[static_cast<std::size_t>(i) * n + j] = v[i] * std::conj(v[j]);
    return HermitianOperator(n, std::move(e));
}

HermitianOperator HermitianOperator::from_entries(int dim, std::vector<Complex> entries,
                                                  double hermiticity_tol) {
    if (dim < 1) throw std::invalid_argument("HermitianOperator: dim must be >= 1");
    if (entries.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("HermitianOperator: entry count does not match dim");
    check_finite(entries);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            const Complex delta = entries[static_cast<std::size_t>(i) * dim + j] -
                                  std::conj(entries[static_cast<std::size_t>(j) * dim + i]);
            if (std::abs(delta) > hermiticity_tol)
                throw std::invalid_argument("HermitianOperator: not Hermitian within tolerance at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return HermitianOperator(dim, std::move(entries));
}

StateVector HermitianOperator::apply(const StateVector& v) const {
    if (v.dim() != dim_)
        throw std::invalid_argument("HermitianOperator::apply: dimension mismatch");
    std::vector<Complex> out(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        Complex s = 0.0;
        for (int j = 0; j < dim_; ++j) s += entry(i, j) * v[j];
        out[static_cast<std::size_t>(i)] = s;
    }
    return StateVector(std::move(out));
}

double HermitianOperator::expectation(const StateVector& v) const {
    const StateVector hv = apply(v);
    Complex s = 0.0;
    for (int i = 0; i < dim_; ++i) s += std::conj(v[i]) * hv[i];
    return s.real();
}

Complex HermitianOperator::trace() const {
    Complex s = 0.0;
    for (int i = 0; i < dim_; ++i) s += entry(i, i);
    return s;
}

HermitianOperator add(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("HermitianOperator add: dimension mismatch");
    std::vector<Complex> e(a.entries());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
    return HermitianOperator::from_entries(a.dim(), std::move(e));
}

HermitianOperator scale(double factor, const HermitianOperator& a) {
    std::vector<Complex> e(a.entries());
    for (Complex& x : e) x *= factor;
    return HermitianOperator::from_entries(a.dim(), std::move(e));
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
    const int na = a.dim();
    const int nb = b.dim();
    const int n = na * nb;
    std::vector<Complex> e(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < na; ++i)
        for (int m = 0; m < nb; ++m)
            for (int j = 0; j < na; ++j)
                for (int k = 0; k < nb; ++k)
                    e[static_cast<std::size_t>(i * nb + m) * n + (j * nb + k)] =
                        a.entry(i, j) * b.entry(m, k);
    return HermitianOperator::from_entries(n, std::move(e));
}

namespace {

double offdiag_frobenius(const std::vector<Complex>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a[static_cast<std::size_t>(i) * n + j]);
    return std::sqrt(s);
}

} // namespace

EigenDecomposition hermitian_eigs(const HermitianOperator& h, const JacobiOptions& opts) {
    const int n = h.dim();
    std::vector<Complex> a(h.entries());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Complex delta = a[static_cast<std::size_t>(i) * n + j] -
                                  std::conj(a[static_cast<std::size_t>(j) * n + i]);
            if (std::abs(delta) > opts.hermiticity_tol)
                throw std::invalid_argument("hermitian_eigs: input not Hermitian within tolerance");
        }

    std::vector<Complex> v(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto at = [&](std::vector<Complex>& m, int i, int j) -> Complex& {
        return m[static_cast<std::size_t>(i) * n + j];
    };

    bool converged = n < 2 || offdiag_frobenius(a, n) <= opts.offdiag_target;
    for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex b = at(a, p, q);
                const double babs = std::abs(b);
                if (babs == 0.0) continue;

                // unitary 2x2 rotation zeroing the (p, q) entry
                const Complex eb = b / babs; // e^{i arg b}
                const double theta = (at(a, q, q).real() - at(a, p, p).real()) / (2.0 * babs);
                const double sgn = theta >= 0.0 ? 1.0 : -1.0;
                const double t = sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const double app = at(a, p, p).real();
                const double aqq = at(a, q, q).real();
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const Complex aip = at(a, i, p);
                    const Complex aiq = at(a, i, q);
                    at(a, i, p) = c * aip - std::conj(eb) * s * aiq;
                    at(a, i, q) = s * aip + std::conj(eb) * c * aiq;
                    at(a, p, i) = std::conj(at(a, i, p));
                    at(a, q, i) = std::conj(at(a, i, q));
                }
                at(a, p, p) = app - t * babs;
                at(a, q, q) = aqq + t * babs;
                at(a, p, q) = 0.0;
                at(a, q, p) = 0.0;

                for (int i = 0; i < n; ++i) {
                    const Complex vip = at(v, i, p);
                    const Complex viq = at(v, i, q);
                    at(v, i, p) = c * vip - std::conj(eb) * s * viq;
                    at(v, i, q) = s * vip + std::conj(eb) * c * viq;
                }
            }
        }
        converged = offdiag_frobenius(a, n) <= opts.offdiag_target;
    }
    if (!converged)
        throw std::runtime_error("hermitian_eigs: Jacobi sweeps did not reach the off-diagonal target");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return at(a, i, i).real() > at(a, j, j).real();
    });

    EigenDecomposition dec;
    dec.eigenvalues.reserve(static_cast<std::size_t>(n));
    dec.eigenvectors.reserve(static_cast<std::size_t>(n));
    for (int idx : order) {
        dec.eigenvalues.push_back(at(a, idx, idx).real());
        std::vector<Complex> col(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = at(v, i, idx);
        dec.eigenvectors.push_back(canonical_phase(StateVector(std::move(col))));
    }
    return dec;
}

} // namespace qstbell
