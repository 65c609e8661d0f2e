#pragma once

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>

#include "amqsim/types.hpp"

namespace amqsim {

// Dense complex amplitude vector over an ordered list of qudit subsystems.
//
// Basis indexing is row-major with subsystem 0 most significant: for dims
// (d₀,…,d_{t−1}) the ket |v₀,…,v_{t−1}⟩ sits at index ((v₀·d₁ + v₁)·d₂ + …).
// States are normalized on construction and immutable afterwards; operations
// return new values.  A state with no subsystems ("scalar") has one amplitude
// and models the residue of measuring every qudit.
class StateVector {
public:
    // Scalar state.
    StateVector() : dims_{}, amps_{Complex{1.0, 0.0}} {}

    StateVector(std::vector<int> dims, std::vector<Complex> amps)
        : dims_(std::move(dims)), amps_(std::move(amps)) {
        std::size_t expected = 1;
        for (int d : dims_) {
            if (d < 2) throw std::invalid_argument("StateVector: every subsystem dim must be >= 2");
            if (expected > kDenseDimensionCap / static_cast<std::size_t>(d))
                throw capability_error("StateVector: total dimension exceeds the dense cap");
            expected *= static_cast<std::size_t>(d);
        }
        if (amps_.size() != expected)
            throw std::invalid_argument("StateVector: amplitude count does not match dims");
        normalize_();
    }

    static StateVector basis_ket(std::vector<int> dims, const std::vector<int>& values) {
        if (values.size() != dims.size())
            throw std::invalid_argument("basis_ket: value count does not match dims");
        std::size_t total = 1, idx = 0;
        for (std::size_t s = 0; s < dims.size(); ++s) {
            if (values[s] < 0 || values[s] >= dims[s])
                throw std::invalid_argument("basis_ket: value out of range");
            idx = idx * static_cast<std::size_t>(dims[s]) + static_cast<std::size_t>(values[s]);
            total *= static_cast<std::size_t>(dims[s]);
        }
        std::vector<Complex> amps(total, Complex{0.0, 0.0});
        amps[idx] = Complex{1.0, 0.0};
        return StateVector(std::move(dims), std::move(amps));
    }

    const std::vector<int>& dims() const { return dims_; }
    int subsystem_count() const { return static_cast<int>(dims_.size()); }
    std::size_t size() const { return amps_.size(); }
    std::span<const Complex> amps() const { return amps_; }
    Complex amp(std::size_t i) const { return amps_[i]; }

    std::size_t flatten(const std::vector<int>& values) const {
        if (values.size() != dims_.size())
            throw std::invalid_argument("flatten: value count does not match subsystem count");
        std::size_t idx = 0;
        for (std::size_t s = 0; s < dims_.size(); ++s) {
            if (values[s] < 0 || values[s] >= dims_[s])
                throw std::invalid_argument("flatten: value out of range");
            idx = idx * static_cast<std::size_t>(dims_[s]) + static_cast<std::size_t>(values[s]);
        }
        return idx;
    }

    std::vector<int> unflatten(std::size_t index) const {
        std::vector<int> values(dims_.size(), 0);
        for (std::size_t s = dims_.size(); s-- > 0;) {
            values[s] = static_cast<int>(index % static_cast<std::size_t>(dims_[s]));
            index /= static_cast<std::size_t>(dims_[s]);
        }
        return values;
    }

    double norm_sq() const {
        double n = 0.0;
        for (const Complex& a : amps_) n += std::norm(a);
        return n;
    }

    // Text fixture format: one "dims:" line, then one "re im" amplitude line per
    // basis index, terminated by "end".  Doubles are printed with 17 significant
    // digits so the round trip is exact.
    void to_text(std::ostream& os) const {
        os << "dims:";
        for (int d : dims_) os << ' ' << d;
        os << '\n' << std::setprecision(17);
        for (const Complex& a : amps_) os << a.real() << ' ' << a.imag() << '\n';
        os << "end\n";
    }

    std::string to_text() const {
        std::ostringstream os;
        to_text(os);
        return os.str();
    }

    static StateVector from_text(std::istream& is) {
        std::string line;
        if (!std::getline(is, line) || line.rfind("dims:", 0) != 0)
            throw std::invalid_argument("StateVector::from_text: missing dims line");
        std::istringstream head(line.substr(5));
        std::vector<int> dims;
        for (int d; head >> d;) dims.push_back(d);
        std::size_t total = 1;
        for (int d : dims) total *= static_cast<std::size_t>(d);
        std::vector<Complex> amps;
        amps.reserve(total);
        while (std::getline(is, line)) {
            if (line == "end") break;
            std::istringstream row(line);
            double re = 0.0, im = 0.0;
            if (!(row >> re >> im))
                throw std::invalid_argument("StateVector::from_text: bad amplitude line");
            amps.emplace_back(re, im);
        }
        if (amps.size() != total)
            throw std::invalid_argument("StateVector::from_text: amplitude count mismatch");
        return StateVector(std::move(dims), std::move(amps));
    }

    static StateVector from_text(const std::string& text) {
        std::istringstream is(text);
        return from_text(is);
    }

private:
    void normalize_() {
        const double n = std::sqrt(norm_sq());
        if (n < 1e-12)
            throw std::invalid_argument("StateVector: cannot normalize a zero vector");
        if (std::abs(n - 1.0) > 1e-15)
            for (Complex& a : amps_) a /= n;
    }

    std::vector<int> dims_;
    std::vector<Complex> amps_;
};

// ⟨a|b⟩.
inline Complex inner(const StateVector& a, const StateVector& b) {
    if (a.dims() != b.dims()) throw std::invalid_argument("inner: subsystem mismatch");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a.amp(i)) * b.amp(i);
    return acc;
}

inline StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<int> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    std::vector<Complex> amps(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) amps[i * b.size() + j] = a.amp(i) * b.amp(j);
    return StateVector(std::move(dims), std::move(amps));
}

// Reorder subsystems: output position p holds input subsystem order[p].
inline StateVector permute_subsystems(const StateVector& st, const std::vector<int>& order) {
    const auto count = static_cast<std::size_t>(st.subsystem_count());
    if (order.size() != count)
        throw std::invalid_argument("permute_subsystems: order length mismatch");
    std::vector<bool> seen(count, false);
    std::vector<int> dims(count);
    for (std::size_t p = 0; p < count; ++p) {
        const int s = order[p];
        if (s < 0 || static_cast<std::size_t>(s) >= count || seen[static_cast<std::size_t>(s)])
            throw std::invalid_argument("permute_subsystems: order is not a permutation");
        seen[static_cast<std::size_t>(s)] = true;
        dims[p] = st.dims()[static_cast<std::size_t>(s)];
    }
    std::vector<Complex> amps(st.size());
    std::vector<std::size_t> strides(count, 1);
    for (std::size_t p = count; p-- > 1;)
        strides[p - 1] = strides[p] * static_cast<std::size_t>(dims[p]);
    for (std::size_t idx = 0; idx < st.size(); ++idx) {
        const std::vector<int> vals = st.unflatten(idx);
        std::size_t out = 0;
        for (std::size_t p = 0; p < count; ++p)
            out += strides[p] * static_cast<std::size_t>(vals[static_cast<std::size_t>(order[p])]);
        amps[out] = st.amp(idx);
    }
    return StateVector(std::move(dims), std::move(amps));
}

inline bool approx_equal(const StateVector& a, const StateVector& b, double tol = kAmplitudeTol) {
    if (a.dims() != b.dims()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a.amp(i) - b.amp(i)) > tol) return false;
    return true;
}

// Small dense complex matrix, row-major.  Used for single-qudit operators.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Complex> a;

    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Complex{0, 0}) {}

    Complex& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Complex& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

inline Matrix identity_matrix(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Complex{1.0, 0.0};
    return m;
}

inline Matrix adjoint(const Matrix& m) {
    Matrix out(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out.at(c, r) = std::conj(m.at(r, c));
    return out;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
    Matrix out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int k = 0; k < a.cols; ++k) {
            const Complex v = a.at(r, k);
            if (v == Complex{0, 0}) continue;
            for (int c = 0; c < b.cols; ++c) out.at(r, c) += v * b.at(k, c);
        }
    return out;
}

// max |a_ij − b_ij|; handy for unitarity checks against the identity.
inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.a.size(); ++i)
        worst = std::max(worst, std::abs(a.a[i] - b.a[i]));
    return worst;
}

// Apply a d×d operator to one subsystem, leaving the rest untouched.
inline StateVector apply_single(const StateVector& st, const Matrix& op, int subsystem) {
    if (subsystem < 0 || subsystem >= st.subsystem_count())
        throw std::invalid_argument("apply_single: subsystem out of range");
    const int d = st.dims()[static_cast<std::size_t>(subsystem)];
    if (op.rows != d || op.cols != d)
        throw std::invalid_argument("apply_single: operator shape does not match subsystem");
    // Stride of the target subsystem in the row-major layout.
    std::size_t stride = 1;
    for (int s = st.subsystem_count() - 1; s > subsystem; --s)
        stride *= static_cast<std::size_t>(st.dims()[static_cast<std::size_t>(s)]);
    const std::size_t block = stride * static_cast<std::size_t>(d);
    std::vector<Complex> out(st.size(), Complex{0, 0});
    for (std::size_t base = 0; base < st.size(); base += block)
        for (std::size_t off = 0; off < stride; ++off)
            for (int r = 0; r < d; ++r) {
                Complex acc{0, 0};
                for (int c = 0; c < d; ++c)
                    acc += op.at(r, c) * st.amp(base + off + stride * static_cast<std::size_t>(c));
                out[base + off + stride * static_cast<std::size_t>(r)] = acc;
            }
    return StateVector(st.dims(), std::move(out));
}

}  // namespace amqsim
