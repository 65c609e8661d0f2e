#pragma once

#include <cmath>

#include "amqsim/state_vector.hpp"
#include "amqsim/types.hpp"

namespace amqsim {

// d-level discrete Fourier matrix: F|k⟩ = (1/√d) Σ_r ζ^{kr} |r⟩.
inline Matrix fourier_matrix(Dimension d) {
    const int n = d.value();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Matrix f(n, n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k)
            f.at(r, k) = d.zeta(static_cast<long long>(k) * r) * scale;
    return f;
}

// F|k⟩ as a single-qudit state.
inline StateVector fourier_state(Dimension d, int k) {
    if (!d.contains(k))
        throw std::invalid_argument("fourier_state: k=" + std::to_string(k) +
                                    " out of range for d=" + std::to_string(d.value()));
    const int n = d.value();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Complex> amps(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        amps[static_cast<std::size_t>(r)] = d.zeta(static_cast<long long>(k) * r) * scale;
    return StateVector({n}, std::move(amps));
}

// Computational ket |k⟩ on a single qudit.
inline StateVector computational_state(Dimension d, int k) {
    if (!d.contains(k))
        throw std::invalid_argument("computational_state: k out of range");
    return StateVector::basis_ket({d.value()}, {k});
}

// One of the 2d single-qudit states used as channel-check tokens.
inline StateVector prepare_basis_state(Dimension d, BasisKind basis, int value) {
    return basis == BasisKind::Computational ? computational_state(d, value)
                                             : fourier_state(d, value);
}

// |φ(u,v)⟩ = (1/√d) Σ_j ζ^{ju} |j⟩|j⊕v⟩.
inline StateVector bell_state(Dimension d, const BellLabel& label) {
    validate_label(d, label);
    const int n = d.value();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Complex> amps(static_cast<std::size_t>(n) * n, Complex{0, 0});
    for (int j = 0; j < n; ++j) {
        const std::size_t idx =
            static_cast<std::size_t>(j) * n + static_cast<std::size_t>(d.add(j, label.v));
        amps[idx] = d.zeta(static_cast<long long>(j) * label.u) * scale;
    }
    return StateVector({n, n}, std::move(amps));
}

// Encoding operator U₍u,v₎ = Σ_j ζ^{ju} |j⊕v⟩⟨j|.  It is unitary and satisfies
// (I ⊗ U₍u,v₎)|φ(0,0)⟩ = |φ(u,v)⟩ exactly.
inline Matrix weyl_operator(Dimension d, const BellLabel& label) {
    validate_label(d, label);
    const int n = d.value();
    Matrix u(n, n);
    for (int j = 0; j < n; ++j)
        u.at(d.add(j, label.v), j) = d.zeta(static_cast<long long>(j) * label.u);
    return u;
}

// Cat state |φ(u₀,…,u_m)⟩ = (1/√d) Σ_j ζ^{j·u₀} |j, j⊕u₁, …, j⊕u_m⟩.
inline StateVector cat_state(Dimension d, const CatLabel& label) {
    validate_label(d, label);
    const int n = d.value();
    const int particles = label.particle_count();
    std::size_t total = 1;
    for (int p = 0; p < particles; ++p) {
        if (total > kDenseDimensionCap / static_cast<std::size_t>(n))
            throw capability_error("cat_state: dimension exceeds the dense cap");
        total *= static_cast<std::size_t>(n);
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Complex> amps(total, Complex{0, 0});
    std::vector<int> values(static_cast<std::size_t>(particles));
    for (int j = 0; j < n; ++j) {
        values[0] = j;
        for (int p = 1; p < particles; ++p)
            values[static_cast<std::size_t>(p)] = d.add(j, label.shift_mark(p));
        std::size_t idx = 0;
        for (int p = 0; p < particles; ++p)
            idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(values[static_cast<std::size_t>(p)]);
        amps[idx] = d.zeta(static_cast<long long>(j) * label.phase_mark()) * scale;
    }
    return StateVector(std::vector<int>(static_cast<std::size_t>(particles), n), std::move(amps));
}

namespace detail {

// Count inversions of a permutation (its parity decides the singlet sign).
inline int inversion_count(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv;
}

}  // namespace detail

// κ-particle κ-level singlet: (1/√κ!) Σ_{perm} (−1)^{inversions} |l₁…l_κ⟩.
// Computational measurement always yields a permutation of {0,…,κ−1}.
inline StateVector singlet_state(int kappa) {
    if (kappa < 2) throw std::invalid_argument("singlet_state: kappa must be >= 2");
    if (kappa > kSingletCap)
        throw capability_error("singlet_state: kappa=" + std::to_string(kappa) +
                               " exceeds the cap of " + std::to_string(kSingletCap));
    const std::vector<int> dims(static_cast<std::size_t>(kappa), kappa);
    std::size_t total = 1;
    for (int p = 0; p < kappa; ++p) total *= static_cast<std::size_t>(kappa);
    double factorial = 1.0;
    for (int p = 2; p <= kappa; ++p) factorial *= p;
    const double scale = 1.0 / std::sqrt(factorial);

    std::vector<Complex> amps(total, Complex{0, 0});
    std::vector<int> perm(static_cast<std::size_t>(kappa));
    for (int p = 0; p < kappa; ++p) perm[static_cast<std::size_t>(p)] = p;
    do {
        std::size_t idx = 0;
        for (int p = 0; p < kappa; ++p)
            idx = idx * static_cast<std::size_t>(kappa) + static_cast<std::size_t>(perm[static_cast<std::size_t>(p)]);
        const double sign = detail::inversion_count(perm) % 2 == 0 ? 1.0 : -1.0;
        amps[idx] = Complex{sign * scale, 0.0};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return StateVector(dims, std::move(amps));
}

}  // namespace amqsim
