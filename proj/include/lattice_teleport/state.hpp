#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lattice_teleport/gates.hpp"
#include "lattice_teleport/register.hpp"

// Dense state-vector engine over a mixed-radix register.  Gate kernels walk
// strided index strata so every amplitude is touched once per gate.

namespace lattice_teleport {

inline constexpr double kNormTol = 1e-12;

// Deterministic random stream owned by the caller; the library never reads
// ambient entropy.
class SeedStream {
  public:
    explicit SeedStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1) with 53 bits, identical on every platform.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

// Reduced density matrix of a single particle (d <= 4 in practice).
class DensityMatrix {
  public:
    explicit DensityMatrix(int dim)
        : dim_(dim),
          m_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Amplitude{0.0, 0.0}) {}

    int dim() const { return dim_; }
    Amplitude& at(int r, int c) {
        return m_[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) +
                  static_cast<std::size_t>(c)];
    }
    const Amplitude& at(int r, int c) const {
        return m_[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) +
                  static_cast<std::size_t>(c)];
    }

    double trace() const {
        double t = 0.0;
        for (int k = 0; k < dim_; ++k) {
            t += at(k, k).real();
        }
        return t;
    }

    // tr(rho^2); equals 1 exactly for a pure marginal.
    double purity() const {
        double p = 0.0;
        for (int r = 0; r < dim_; ++r) {
            for (int c = 0; c < dim_; ++c) {
                p += (at(r, c) * at(c, r)).real();
            }
        }
        return p;
    }

    double hermiticity_error() const {
        double e = 0.0;
        for (int r = 0; r < dim_; ++r) {
            for (int c = 0; c < dim_; ++c) {
                e = std::max(e, std::abs(at(r, c) - std::conj(at(c, r))));
            }
        }
        return e;
    }

  private:
    int dim_;
    std::vector<Amplitude> m_;
};

class PureState {
  public:
    // Basis state with amplitude one at the encoded index.
    static PureState basis(const Register& reg, const std::vector<int>& levels) {
        PureState s(reg);
        s.amps_[reg.encode(levels)] = Amplitude{1.0, 0.0};
        return s;
    }

    static PureState zero(const Register& reg) {
        PureState s(reg);
        s.amps_[0] = Amplitude{1.0, 0.0};
        return s;
    }

    // Validated constructor from raw amplitudes (unit norm required).
    static PureState from_amplitudes(const Register& reg, std::vector<Amplitude> amps) {
        if (amps.size() != reg.dimension()) {
            throw std::invalid_argument("amplitude count does not match register dimension");
        }
        double n2 = 0.0;
        for (const Amplitude& a : amps) {
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
                throw std::invalid_argument("amplitudes must be finite");
            }
            n2 += std::norm(a);
        }
        if (std::abs(n2 - 1.0) > 1e-9) {
            throw std::invalid_argument("state must have unit norm");
        }
        PureState s(reg);
        s.amps_ = std::move(amps);
        s.normalize();
        return s;
    }

    const Register& reg() const { return reg_; }
    std::size_t dimension() const { return amps_.size(); }
    const Amplitude& amp(std::size_t i) const { return amps_[i]; }
    std::span<const Amplitude> amps() const { return amps_; }

    double norm_sq() const {
        double n = 0.0;
        for (const Amplitude& a : amps_) {
            n += std::norm(a);
        }
        return n;
    }

    void normalize() {
        const double n = std::sqrt(norm_sq());
        if (n <= 0.0) {
            throw std::runtime_error("cannot normalize a zero state");
        }
        for (Amplitude& a : amps_) {
            a /= n;
        }
    }

    // I (x) ... (x) u (x) ... (x) I on the chosen particle.
    void apply_local(int particle_idx, const LocalUnitary& u) {
        const Particle& p = reg_.particle(particle_idx);
        if (u.dim() != p.dimension) {
            throw std::invalid_argument("unitary dimension does not match particle " + p.label);
        }
        const std::size_t stride = reg_.stride(particle_idx);
        const std::size_t d = static_cast<std::size_t>(u.dim());
        const std::size_t block = stride * d;
        const std::size_t n = amps_.size();
        if (d == 2) {
            const Amplitude u00 = u.at(0, 0), u01 = u.at(0, 1), u10 = u.at(1, 0), u11 = u.at(1, 1);
            for (std::size_t base = 0; base < n; base += block) {
                for (std::size_t off = 0; off < stride; ++off) {
                    Amplitude& x = amps_[base + off];
                    Amplitude& y = amps_[base + off + stride];
                    const Amplitude x0 = x;
                    x = u00 * x0 + u01 * y;
                    y = u10 * x0 + u11 * y;
                }
            }
            return;
        }
        std::vector<Amplitude> v(d);
        for (std::size_t base = 0; base < n; base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (std::size_t l = 0; l < d; ++l) {
                    v[l] = amps_[base + off + l * stride];
                }
                for (std::size_t r = 0; r < d; ++r) {
                    Amplitude acc{0.0, 0.0};
                    for (std::size_t c = 0; c < d; ++c) {
                        acc += u.at(static_cast<int>(r), static_cast<int>(c)) * v[c];
                    }
                    amps_[base + off + r * stride] = acc;
                }
            }
        }
    }

    void apply_local(const std::string& label, const LocalUnitary& u) {
        apply_local(reg_.index_of(label), u);
    }

    // Diagonal two-particle phase: exp(i phase) on every amplitude whose
    // digits match the rule, all others untouched.
    void apply_pair_phase(const PairPhaseRule& rule) {
        const int p1 = reg_.index_of(rule.first);
        const int p2 = reg_.index_of(rule.second);
        if (p1 == p2) {
            throw std::invalid_argument("pair phase rule needs two distinct particles");
        }
        check_level(p1, rule.first_level);
        check_level(p2, rule.second_level);
        const std::size_t s1 = reg_.stride(p1);
        const std::size_t s2 = reg_.stride(p2);
        const std::size_t d1 = static_cast<std::size_t>(reg_.particle(p1).dimension);
        const std::size_t d2 = static_cast<std::size_t>(reg_.particle(p2).dimension);
        const std::size_t l1 = static_cast<std::size_t>(rule.first_level);
        const std::size_t l2 = static_cast<std::size_t>(rule.second_level);
        const Amplitude f = std::polar(1.0, rule.phase);
        const std::size_t n = amps_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if ((i / s1) % d1 == l1 && (i / s2) % d2 == l2) {
                amps_[i] *= f;
            }
        }
    }

    // Joint unitary on a small set of particles (reference schemes only).
    // Matrix is row-major over the mixed-radix product of the listed
    // particles, in the order given.
    void apply_joint(const std::vector<int>& particle_idxs, const std::vector<Amplitude>& matrix) {
        const std::size_t k = particle_idxs.size();
        if (k == 0) {
            throw std::invalid_argument("joint unitary needs at least one particle");
        }
        std::vector<std::size_t> strides(k);
        std::vector<std::size_t> dims(k);
        std::size_t sub = 1;
        for (std::size_t t = 0; t < k; ++t) {
            strides[t] = reg_.stride(particle_idxs[t]);
            dims[t] = static_cast<std::size_t>(reg_.particle(particle_idxs[t]).dimension);
            sub *= dims[t];
        }
        if (matrix.size() != sub * sub) {
            throw std::invalid_argument("joint matrix size does not match particle dimensions");
        }
        // Offsets of every sub-basis combination relative to a base index.
        std::vector<std::size_t> offsets(sub, 0);
        for (std::size_t m = 0; m < sub; ++m) {
            std::size_t rem = m;
            for (std::size_t t = k; t-- > 0;) {
                offsets[m] += (rem % dims[t]) * strides[t];
                rem /= dims[t];
            }
        }
        std::vector<Amplitude> v(sub);
        const std::size_t n = amps_.size();
        for (std::size_t i = 0; i < n; ++i) {
            bool base = true;
            for (std::size_t t = 0; t < k; ++t) {
                if ((i / strides[t]) % dims[t] != 0) {
                    base = false;
                    break;
                }
            }
            if (!base) {
                continue;
            }
            for (std::size_t m = 0; m < sub; ++m) {
                v[m] = amps_[i + offsets[m]];
            }
            for (std::size_t r = 0; r < sub; ++r) {
                Amplitude acc{0.0, 0.0};
                for (std::size_t c = 0; c < sub; ++c) {
                    acc += matrix[r * sub + c] * v[c];
                }
                amps_[i + offsets[r]] = acc;
            }
        }
    }

    void apply_joint(const std::vector<std::string>& labels, const std::vector<Amplitude>& matrix) {
        std::vector<int> idxs;
        idxs.reserve(labels.size());
        for (const std::string& l : labels) {
            idxs.push_back(reg_.index_of(l));
        }
        apply_joint(idxs, matrix);
    }

    // Collapses the chosen particle to `outcome`, renormalizing.
    void project(int particle_idx, int outcome) {
        const std::size_t s = reg_.stride(particle_idx);
        const std::size_t d = static_cast<std::size_t>(reg_.particle(particle_idx).dimension);
        const std::size_t o = static_cast<std::size_t>(outcome);
        const std::size_t n = amps_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if ((i / s) % d != o) {
                amps_[i] = Amplitude{0.0, 0.0};
            }
        }
        normalize();
    }

  private:
    explicit PureState(const Register& reg)
        : reg_(reg), amps_(reg.dimension(), Amplitude{0.0, 0.0}) {}

    void check_level(int particle_idx, int level) const {
        if (level < 0 || level >= reg_.particle(particle_idx).dimension) {
            throw std::invalid_argument("level out of range for particle " +
                                        reg_.particle(particle_idx).label);
        }
    }

    Register reg_;
    std::vector<Amplitude> amps_;
};

inline Amplitude inner_product(const PureState& x, const PureState& y) {
    if (x.reg() != y.reg()) {
        throw std::invalid_argument("inner product requires matching registers");
    }
    Amplitude acc{0.0, 0.0};
    const std::size_t n = x.dimension();
    for (std::size_t i = 0; i < n; ++i) {
        acc += std::conj(x.amp(i)) * y.amp(i);
    }
    return acc;
}

// Partial trace over all particles except the chosen one.
inline DensityMatrix reduced_density(const PureState& state, int particle_idx) {
    const Register& reg = state.reg();
    const int d = reg.particle(particle_idx).dimension;
    const std::size_t s = reg.stride(particle_idx);
    const std::size_t du = static_cast<std::size_t>(d);
    const std::size_t block = s * du;
    DensityMatrix rho(d);
    const std::size_t n = state.dimension();
    for (std::size_t base = 0; base < n; base += block) {
        for (std::size_t off = 0; off < s; ++off) {
            for (int r = 0; r < d; ++r) {
                const Amplitude ar = state.amp(base + off + static_cast<std::size_t>(r) * s);
                for (int c = 0; c < d; ++c) {
                    const Amplitude ac = state.amp(base + off + static_cast<std::size_t>(c) * s);
                    rho.at(r, c) += ar * std::conj(ac);
                }
            }
        }
    }
    return rho;
}

inline DensityMatrix reduced_density(const PureState& state, const std::string& label) {
    return reduced_density(state, state.reg().index_of(label));
}

// <phi| rho |phi> of the particle's marginal against the input qubit, taken
// on levels 0 and 1.  A qutrit carrying weight on level 2 indicates leakage.
inline double fidelity_with_qubit(const PureState& state, const std::string& label,
                                  const InputQubit& phi) {
    const int idx = state.reg().index_of(label);
    const DensityMatrix rho = reduced_density(state, idx);
    if (rho.dim() > 2 && rho.at(2, 2).real() > 1e-10) {
        throw std::runtime_error("particle " + label + " leaked into level 2");
    }
    const Amplitude a = phi.a;
    const Amplitude b = phi.b;
    const Amplitude f = std::conj(a) * rho.at(0, 0) * a + std::conj(a) * rho.at(0, 1) * b +
                        std::conj(b) * rho.at(1, 0) * a + std::conj(b) * rho.at(1, 1) * b;
    return f.real();
}

// Projective measurement in the particle's level basis.  Outcome k is drawn
// with the Born probability; the collapsed state is returned alongside.
inline std::pair<int, PureState> measure(const PureState& state, const std::string& label,
                                         SeedStream& stream) {
    const int idx = state.reg().index_of(label);
    const DensityMatrix rho = reduced_density(state, idx);
    const double u = stream.next_unit();
    double acc = 0.0;
    int outcome = rho.dim() - 1;
    for (int k = 0; k < rho.dim(); ++k) {
        acc += rho.at(k, k).real();
        if (u < acc) {
            outcome = k;
            break;
        }
    }
    PureState collapsed = state;
    collapsed.project(idx, outcome);
    return {outcome, std::move(collapsed)};
}

}  // namespace lattice_teleport
