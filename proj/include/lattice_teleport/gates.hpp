#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

// Small unitary building blocks shared by the lattice operations, the
// teleportation pipelines and the verification code.

namespace lattice_teleport {

using Amplitude = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kUnitaryTol = 1e-12;

inline double inv_sqrt2() { return 0.70710678118654752440; }

// Unknown qubit state a|0> + b|1> to be teleported.
struct InputQubit {
    Amplitude a{1.0, 0.0};
    Amplitude b{0.0, 0.0};

    static InputQubit normalized(Amplitude a, Amplitude b) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
            !std::isfinite(b.real()) || !std::isfinite(b.imag())) {
            throw std::invalid_argument("input qubit amplitudes must be finite");
        }
        const double n2 = std::norm(a) + std::norm(b);
        if (std::abs(n2 - 1.0) > 1e-12) {
            throw std::invalid_argument("input qubit must be normalized");
        }
        return InputQubit{a, b};
    }
};

// Dense d x d unitary acting on a single particle. Row-major entries,
// unitarity enforced on construction.
class LocalUnitary {
  public:
    LocalUnitary(int dim, std::vector<Amplitude> entries) : dim_(dim), m_(std::move(entries)) {
        if (dim_ < 2 || m_.size() != static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_)) {
            throw std::invalid_argument("local unitary entry count does not match dimension");
        }
        for (const Amplitude& e : m_) {
            if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
                throw std::invalid_argument("local unitary entries must be finite");
            }
        }
        for (int r = 0; r < dim_; ++r) {
            for (int c = 0; c < dim_; ++c) {
                Amplitude acc{0.0, 0.0};
                for (int k = 0; k < dim_; ++k) {
                    acc += std::conj(at(k, r)) * at(k, c);
                }
                const Amplitude want = (r == c) ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
                if (std::abs(acc - want) > kUnitaryTol) {
                    throw std::invalid_argument("matrix is not unitary");
                }
            }
        }
    }

    int dim() const { return dim_; }
    const Amplitude& at(int row, int col) const {
        return m_[static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
                   static_cast<std::size_t>(col)];
    }
    const std::vector<Amplitude>& entries() const { return m_; }

    LocalUnitary adjoint() const {
        std::vector<Amplitude> t(m_.size());
        for (int r = 0; r < dim_; ++r) {
            for (int c = 0; c < dim_; ++c) {
                t[static_cast<std::size_t>(c) * static_cast<std::size_t>(dim_) +
                  static_cast<std::size_t>(r)] = std::conj(at(r, c));
            }
        }
        return LocalUnitary(dim_, std::move(t));
    }

    friend bool operator==(const LocalUnitary& lhs, const LocalUnitary& rhs) {
        return lhs.dim_ == rhs.dim_ && lhs.m_ == rhs.m_;
    }

  private:
    int dim_;
    std::vector<Amplitude> m_;
};

inline LocalUnitary identity_unitary(int dim) {
    std::vector<Amplitude> m(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
                             Amplitude{0.0, 0.0});
    for (int k = 0; k < dim; ++k) {
        m[static_cast<std::size_t>(k) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(k)] =
            Amplitude{1.0, 0.0};
    }
    return LocalUnitary(dim, std::move(m));
}

inline LocalUnitary pauli_x() {
    return LocalUnitary(2, {{0, 0}, {1, 0}, {1, 0}, {0, 0}});
}
inline LocalUnitary pauli_y() {
    return LocalUnitary(2, {{0, 0}, {0, -1}, {0, 1}, {0, 0}});
}
inline LocalUnitary pauli_z() {
    return LocalUnitary(2, {{1, 0}, {0, 0}, {0, 0}, {-1, 0}});
}

// |lo> -> (|lo> + |hi>)/sqrt(2), |hi> -> (|lo> - |hi>)/sqrt(2); identity on
// any remaining level.
inline LocalUnitary hadamard_pair(int dim, int lo, int hi) {
    if (lo < 0 || hi <= lo || hi >= dim) {
        throw std::invalid_argument("invalid Hadamard level pair");
    }
    std::vector<Amplitude> m(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
                             Amplitude{0.0, 0.0});
    auto set = [&](int r, int c, double v) {
        m[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(c)] =
            Amplitude{v, 0.0};
    };
    for (int k = 0; k < dim; ++k) {
        if (k != lo && k != hi) {
            set(k, k, 1.0);
        }
    }
    const double h = inv_sqrt2();
    set(lo, lo, h);
    set(lo, hi, h);
    set(hi, lo, h);
    set(hi, hi, -h);
    return LocalUnitary(dim, std::move(m));
}

// Real rotation [[cos t, -sin t], [sin t, cos t]].
inline LocalUnitary rotation2(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return LocalUnitary(2, {{c, 0}, {-s, 0}, {s, 0}, {c, 0}});
}

// Maps |0> to a|0> + b|1>.
inline LocalUnitary prepare_qubit(const InputQubit& phi) {
    return LocalUnitary(2, {phi.a, -std::conj(phi.b), phi.b, std::conj(phi.a)});
}

// Maps |0> to a|0> + b|2> on a qutrit, leaving level 1 alone.
inline LocalUnitary prepare_qutrit_02(const InputQubit& phi) {
    return LocalUnitary(3, {phi.a, {0, 0}, -std::conj(phi.b),
                            {0, 0}, {1, 0}, {0, 0},
                            phi.b, {0, 0}, std::conj(phi.a)});
}

// Conditional-correction classes of the even-N construction (unnormalized,
// entries +-1, each satisfying W W^dag = 2).  W0/sqrt(2) and W1/sqrt(2) are
// the rotations by +-pi/4; W2/sqrt(2) and W3/sqrt(2) are reflections.
inline const std::vector<Amplitude>& w_class_raw(int k) {
    static const std::vector<Amplitude> w[4] = {
        {{1, 0}, {-1, 0}, {1, 0}, {1, 0}},
        {{1, 0}, {1, 0}, {-1, 0}, {1, 0}},
        {{1, 0}, {1, 0}, {1, 0}, {-1, 0}},
        {{1, 0}, {-1, 0}, {-1, 0}, {-1, 0}},
    };
    if (k < 0 || k > 3) {
        throw std::invalid_argument("W class index out of range");
    }
    return w[k];
}

inline LocalUnitary w_class_normalized(int k) {
    std::vector<Amplitude> m = w_class_raw(k);
    for (Amplitude& e : m) {
        e *= inv_sqrt2();
    }
    return LocalUnitary(2, std::move(m));
}

// Conditional operators of the three-site construction, indexed by the
// basis branch of sites 1 and 2.
inline LocalUnitary three_site_class(int k) {
    switch (k) {
        case 0:
            return LocalUnitary(2, {{0, 0}, {-1, 0}, {1, 0}, {0, 0}});  // -i sigma_y
        case 1:
            return pauli_x();
        case 2:
            return LocalUnitary(2, {{-1, 0}, {0, 0}, {0, 0}, {1, 0}});  // -sigma_z
        case 3:
            return identity_unitary(2);
        default:
            throw std::invalid_argument("three-site class index out of range");
    }
}

// Diagonal collisional-phase rule: amplitudes whose digits match
// (first_level, second_level) pick up exp(i phase).
struct PairPhaseRule {
    std::string first;
    int first_level = 0;
    std::string second;
    int second_level = 0;
    double phase = kPi;
};

}  // namespace lattice_teleport
