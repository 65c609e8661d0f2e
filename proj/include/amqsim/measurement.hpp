#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "amqsim/rng.hpp"
#include "amqsim/state_vector.hpp"
#include "amqsim/states.hpp"
#include "amqsim/types.hpp"

namespace amqsim {

struct MeasurementOutcome {
    std::vector<int> values;  // one per measured subsystem, in the order requested
    StateVector post_state;   // surviving subsystems, renormalized
};

// Born sampling over a probability table.  Zero-weight entries are never
// selected; an all-zero table indicates a broken projection upstream.
inline std::size_t sample_discrete(const std::vector<double>& probs, RandomSource& rng) {
    double total = 0.0;
    for (double p : probs) total += p;
    if (total <= 0.0)
        throw std::logic_error("sample_discrete: all outcomes have zero probability");
    const double x = rng.uniform_real() * total;
    double acc = 0.0;
    std::size_t last_nonzero = probs.size();
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] <= 0.0) continue;
        last_nonzero = i;
        acc += probs[i];
        if (x < acc) return i;
    }
    return last_nonzero;  // floating-point tail
}

namespace detail {

inline void validate_subsystems(const StateVector& st, const std::vector<int>& subsystems) {
    if (subsystems.empty())
        throw std::invalid_argument("measure: no subsystems given");
    std::vector<bool> seen(static_cast<std::size_t>(st.subsystem_count()), false);
    for (int s : subsystems) {
        if (s < 0 || s >= st.subsystem_count())
            throw std::invalid_argument("measure: subsystem index out of range");
        if (seen[static_cast<std::size_t>(s)])
            throw std::invalid_argument("measure: duplicate subsystem index");
        seen[static_cast<std::size_t>(s)] = true;
    }
}

}  // namespace detail

// Projective measurement of the listed subsystems in ℬ₁.  The outcome is
// sampled with Born probabilities; measured qudits are removed and the
// remainder renormalized (a scalar state if everything was measured).
inline MeasurementOutcome measure_computational(const StateVector& st,
                                                const std::vector<int>& subsystems,
                                                RandomSource& rng) {
    detail::validate_subsystems(st, subsystems);

    std::size_t outcome_count = 1;
    for (int s : subsystems)
        outcome_count *= static_cast<std::size_t>(st.dims()[static_cast<std::size_t>(s)]);

    std::vector<double> probs(outcome_count, 0.0);
    auto bucket_of = [&](const std::vector<int>& vals) {
        std::size_t b = 0;
        for (int s : subsystems)
            b = b * static_cast<std::size_t>(st.dims()[static_cast<std::size_t>(s)]) +
                static_cast<std::size_t>(vals[static_cast<std::size_t>(s)]);
        return b;
    };
    for (std::size_t i = 0; i < st.size(); ++i) {
        const double w = std::norm(st.amp(i));
        if (w == 0.0) continue;
        probs[bucket_of(st.unflatten(i))] += w;
    }

    const std::size_t chosen = sample_discrete(probs, rng);
    std::vector<int> outcome(subsystems.size());
    {
        std::size_t rest = chosen;
        for (std::size_t k = subsystems.size(); k-- > 0;) {
            const int d = st.dims()[static_cast<std::size_t>(subsystems[k])];
            outcome[k] = static_cast<int>(rest % static_cast<std::size_t>(d));
            rest /= static_cast<std::size_t>(d);
        }
    }

    // Collect the surviving subsystems (original order) for the chosen branch.
    std::vector<int> keep;
    for (int s = 0; s < st.subsystem_count(); ++s)
        if (std::find(subsystems.begin(), subsystems.end(), s) == subsystems.end())
            keep.push_back(s);
    if (keep.empty())
        return {std::move(outcome), StateVector()};

    std::vector<int> post_dims;
    post_dims.reserve(keep.size());
    std::size_t post_size = 1;
    for (int s : keep) {
        post_dims.push_back(st.dims()[static_cast<std::size_t>(s)]);
        post_size *= static_cast<std::size_t>(st.dims()[static_cast<std::size_t>(s)]);
    }
    std::vector<Complex> post(post_size, Complex{0, 0});
    for (std::size_t i = 0; i < st.size(); ++i) {
        if (st.amp(i) == Complex{0, 0}) continue;
        const std::vector<int> vals = st.unflatten(i);
        bool match = true;
        for (std::size_t k = 0; k < subsystems.size(); ++k)
            if (vals[static_cast<std::size_t>(subsystems[k])] != outcome[k]) {
                match = false;
                break;
            }
        if (!match) continue;
        std::size_t idx = 0;
        for (std::size_t k = 0; k < keep.size(); ++k)
            idx = idx * static_cast<std::size_t>(post_dims[k]) +
                  static_cast<std::size_t>(vals[static_cast<std::size_t>(keep[k])]);
        post[idx] = st.amp(i);
    }
    return {std::move(outcome), StateVector(std::move(post_dims), std::move(post))};
}

// Measurement of a single subsystem in ℬ₂ = {F|k⟩}.  Equivalent to applying F†
// to that qudit and reading it out in ℬ₁.
inline MeasurementOutcome fourier_basis_measure(const StateVector& st, int subsystem,
                                                RandomSource& rng) {
    if (subsystem < 0 || subsystem >= st.subsystem_count())
        throw std::invalid_argument("fourier_basis_measure: subsystem out of range");
    const Dimension d(st.dims()[static_cast<std::size_t>(subsystem)]);
    const StateVector rotated = apply_single(st, adjoint(fourier_matrix(d)), subsystem);
    return measure_computational(rotated, {subsystem}, rng);
}

// Joint measurement of an ordered pair of equal-dimension qudits in the
// generalized Bell basis {|φ(u,v)⟩}, with |φ(u,v)⟩ = (1/√d) Σ_t ζ^{tu}
// |t⟩_first |t⊕v⟩_second.  Returns the sampled label and the collapsed
// remainder (the pair is removed).
inline std::pair<BellLabel, StateVector> measure_generalized_bell(const StateVector& st,
                                                                  int first, int second,
                                                                  RandomSource& rng) {
    detail::validate_subsystems(st, {first, second});
    const int d_first = st.dims()[static_cast<std::size_t>(first)];
    const int d_second = st.dims()[static_cast<std::size_t>(second)];
    if (d_first != d_second)
        throw std::invalid_argument("measure_generalized_bell: subsystem dimensions differ");
    const Dimension d(d_first);
    const int n = d.value();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));

    std::vector<int> keep;
    for (int s = 0; s < st.subsystem_count(); ++s)
        if (s != first && s != second) keep.push_back(s);
    std::vector<int> rest_dims;
    std::size_t rest_size = 1;
    for (int s : keep) {
        rest_dims.push_back(st.dims()[static_cast<std::size_t>(s)]);
        rest_size *= static_cast<std::size_t>(st.dims()[static_cast<std::size_t>(s)]);
    }

    // Projected (unnormalized) remainder amplitudes for every label (u,v).
    const std::size_t label_count = static_cast<std::size_t>(n) * n;
    std::vector<std::vector<Complex>> branches(label_count,
                                               std::vector<Complex>(rest_size, Complex{0, 0}));
    for (std::size_t i = 0; i < st.size(); ++i) {
        if (st.amp(i) == Complex{0, 0}) continue;
        const std::vector<int> vals = st.unflatten(i);
        const int t = vals[static_cast<std::size_t>(first)];
        const int w = vals[static_cast<std::size_t>(second)];
        const int v = d.sub(w, t);  // second slot carries t⊕v
        std::size_t rest_idx = 0;
        for (std::size_t k = 0; k < keep.size(); ++k)
            rest_idx = rest_idx * static_cast<std::size_t>(rest_dims[k]) +
                       static_cast<std::size_t>(vals[static_cast<std::size_t>(keep[k])]);
        for (int u = 0; u < n; ++u) {
            const Complex coeff = std::conj(d.zeta(static_cast<long long>(t) * u)) * scale;
            branches[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)][rest_idx] +=
                coeff * st.amp(i);
        }
    }

    std::vector<double> probs(label_count, 0.0);
    for (std::size_t b = 0; b < label_count; ++b)
        for (const Complex& a : branches[b]) probs[b] += std::norm(a);

    const std::size_t chosen = sample_discrete(probs, rng);
    const BellLabel label{static_cast<int>(chosen) / n, static_cast<int>(chosen) % n};
    if (keep.empty())
        return {label, StateVector()};
    return {label, StateVector(std::move(rest_dims), std::move(branches[chosen]))};
}

// Joint measurement of all subsystems (in the given order) in the cat basis
// {|φ(u₀,…,u_m)⟩}.  The order fixes which qudit plays which cat position.
inline std::pair<CatLabel, StateVector> measure_cat_basis(const StateVector& st,
                                                          const std::vector<int>& ordered,
                                                          RandomSource& rng) {
    detail::validate_subsystems(st, ordered);
    if (static_cast<int>(ordered.size()) != st.subsystem_count())
        throw std::invalid_argument("measure_cat_basis: order must cover every subsystem");
    if (ordered.size() < 2)
        throw std::invalid_argument("measure_cat_basis: need at least two qudits");
    const int n = st.dims()[static_cast<std::size_t>(ordered[0])];
    for (int s : ordered)
        if (st.dims()[static_cast<std::size_t>(s)] != n)
            throw std::invalid_argument("measure_cat_basis: subsystem dimensions differ");
    const Dimension d(n);
    const int particles = static_cast<int>(ordered.size());
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));

    std::size_t label_count = 1;
    for (int p = 0; p < particles; ++p) label_count *= static_cast<std::size_t>(n);

    // ⟨φ(c)|ψ⟩ = (1/√d) Σ_j ζ^{−j·c₀} ψ[j at pos 0, j⊕c_k at pos k].
    std::vector<Complex> overlap(label_count, Complex{0, 0});
    std::vector<int> vals(static_cast<std::size_t>(st.subsystem_count()), 0);
    std::vector<int> marks(static_cast<std::size_t>(particles), 0);
    for (std::size_t c = 0; c < label_count; ++c) {
        std::size_t rest = c;
        for (int p = particles; p-- > 0;) {
            marks[static_cast<std::size_t>(p)] = static_cast<int>(rest % static_cast<std::size_t>(n));
            rest /= static_cast<std::size_t>(n);
        }
        Complex acc{0, 0};
        for (int j = 0; j < n; ++j) {
            vals[static_cast<std::size_t>(ordered[0])] = j;
            for (int p = 1; p < particles; ++p)
                vals[static_cast<std::size_t>(ordered[static_cast<std::size_t>(p)])] =
                    d.add(j, marks[static_cast<std::size_t>(p)]);
            acc += std::conj(d.zeta(static_cast<long long>(j) * marks[0])) * scale *
                   st.amp(st.flatten(vals));
        }
        overlap[c] = acc;
    }

    std::vector<double> probs(label_count, 0.0);
    for (std::size_t c = 0; c < label_count; ++c) probs[c] = std::norm(overlap[c]);
    const std::size_t chosen = sample_discrete(probs, rng);

    std::vector<int> chosen_marks(static_cast<std::size_t>(particles), 0);
    std::size_t rest = chosen;
    for (int p = particles; p-- > 0;) {
        chosen_marks[static_cast<std::size_t>(p)] = static_cast<int>(rest % static_cast<std::size_t>(n));
        rest /= static_cast<std::size_t>(n);
    }
    return {CatLabel(std::move(chosen_marks)), StateVector()};
}

}  // namespace amqsim
