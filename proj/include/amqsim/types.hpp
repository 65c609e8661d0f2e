#pragma once

#include <complex>
#include <numbers>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace amqsim {

using Complex = std::complex<double>;

// Absolute tolerance for amplitude and coefficient comparisons throughout.
inline constexpr double kAmplitudeTol = 1e-9;

// Hard cap on the total Hilbert-space dimension of any dense state.  Requests
// beyond this fail with capability_error; callers should use the label engine.
inline constexpr std::size_t kDenseDimensionCap = 1000000;

// Singlet states carry one term per permutation (κ! of them).
inline constexpr int kSingletCap = 6;

// Requested object exceeds what the dense engine can represent.
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Protocol bookkeeping violation: mismatched records, missing announcements, ...
struct protocol_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Qudit level count d ≥ 2, with arithmetic mod d and powers of ζ = e^{2πi/d}.
class Dimension {
public:
    explicit Dimension(int levels) : d_(levels) {
        if (levels < 2)
            throw std::invalid_argument("Dimension: level count must be >= 2, got " +
                                        std::to_string(levels));
    }

    int value() const { return d_; }

    // x mod d, mapped into [0, d).
    int reduce(long long x) const {
        long long m = x % d_;
        return static_cast<int>(m < 0 ? m + d_ : m);
    }

    int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }  // ⊕
    int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }  // ⊖

    // ζ^e with ζ = e^{2πi/d}; the exponent is reduced mod d first.
    Complex zeta(long long exponent) const {
        const double angle = 2.0 * std::numbers::pi * reduce(exponent) / d_;
        return {std::cos(angle), std::sin(angle)};
    }

    bool contains(int mark) const { return 0 <= mark && mark < d_; }

    friend bool operator==(Dimension a, Dimension b) { return a.d_ == b.d_; }

private:
    int d_;
};

// Bell-state label (u, v): |φ(u,v)⟩ = (1/√d) Σ_j ζ^{ju} |j⟩|j⊕v⟩.
// u is the phase mark, v the shift mark.
struct BellLabel {
    int u = 0;
    int v = 0;

    friend bool operator==(const BellLabel& a, const BellLabel& b) {
        return a.u == b.u && a.v == b.v;
    }
    friend bool operator<(const BellLabel& a, const BellLabel& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

// Cat-state label (u₀,…,u_m): u₀ is the phase mark, u₁..u_m are shift marks.
// An m = 1 cat is a Bell pair; the label always has at least two entries.
struct CatLabel {
    std::vector<int> marks;

    CatLabel() = default;
    explicit CatLabel(std::vector<int> ms) : marks(std::move(ms)) {}

    int particle_count() const { return static_cast<int>(marks.size()); }
    int shift_count() const { return particle_count() - 1; }  // m
    int phase_mark() const { return marks.front(); }
    int shift_mark(int k) const { return marks.at(static_cast<std::size_t>(k)); }  // k in 1..m

    friend bool operator==(const CatLabel& a, const CatLabel& b) { return a.marks == b.marks; }
    friend bool operator<(const CatLabel& a, const CatLabel& b) { return a.marks < b.marks; }
};

// The two measurement bases of the protocol: ℬ₁ = {|k⟩}, ℬ₂ = {F|k⟩}.
enum class BasisKind { Computational, Fourier };

inline const char* basis_name(BasisKind b) {
    return b == BasisKind::Computational ? "computational" : "fourier";
}

inline void validate_label(Dimension d, const BellLabel& label) {
    if (!d.contains(label.u) || !d.contains(label.v))
        throw std::invalid_argument("BellLabel (" + std::to_string(label.u) + "," +
                                    std::to_string(label.v) + ") out of range for d=" +
                                    std::to_string(d.value()));
}

inline void validate_label(Dimension d, const CatLabel& label) {
    if (label.particle_count() < 2)
        throw std::invalid_argument("CatLabel needs a phase mark and at least one shift mark");
    for (int mark : label.marks)
        if (!d.contains(mark))
            throw std::invalid_argument("CatLabel mark " + std::to_string(mark) +
                                        " out of range for d=" + std::to_string(d.value()));
}

}  // namespace amqsim
