#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Mixed-radix particle register. The first particle owns the most
// significant digit of the amplitude index.

namespace lattice_teleport {

enum class Role { Site, Ancilla };

struct Particle {
    std::string label;
    int dimension = 2;
    Role role = Role::Site;
};

class Register {
  public:
    explicit Register(std::vector<Particle> particles)
        : particles_(std::move(particles)) {
        if (particles_.empty()) {
            throw std::invalid_argument("register needs at least one particle");
        }
        strides_.resize(particles_.size());
        std::size_t acc = 1;
        for (int p = static_cast<int>(particles_.size()) - 1; p >= 0; --p) {
            const Particle& part = particles_[static_cast<std::size_t>(p)];
            if (part.dimension < 2) {
                throw std::invalid_argument("particle dimension must be >= 2: " + part.label);
            }
            strides_[static_cast<std::size_t>(p)] = acc;
            acc *= static_cast<std::size_t>(part.dimension);
        }
        dimension_ = acc;
        for (std::size_t i = 0; i < particles_.size(); ++i) {
            for (std::size_t j = i + 1; j < particles_.size(); ++j) {
                if (particles_[i].label == particles_[j].label) {
                    throw std::invalid_argument("duplicate particle label: " + particles_[i].label);
                }
            }
            if (particles_[i].role == Role::Site) {
                ++num_sites_;
            } else {
                ++num_ancillas_;
            }
        }
        lattice_layout_ = detect_lattice_layout();
    }

    // Lattice register [A1, A2, 1 .. N]: qutrit ancillas in front of qubit sites.
    static Register lattice(int num_sites, int num_ancillas) {
        if (num_sites < 1) {
            throw std::invalid_argument("lattice register needs at least one site");
        }
        if (num_ancillas < 0 || num_ancillas > 2) {
            throw std::invalid_argument("lattice register supports at most two ancillas");
        }
        std::vector<Particle> parts;
        parts.reserve(static_cast<std::size_t>(num_sites + num_ancillas));
        for (int k = 1; k <= num_ancillas; ++k) {
            parts.push_back({"A" + std::to_string(k), 3, Role::Ancilla});
        }
        for (int j = 1; j <= num_sites; ++j) {
            parts.push_back({std::to_string(j), 2, Role::Site});
        }
        return Register(std::move(parts));
    }

    std::size_t dimension() const { return dimension_; }
    int num_particles() const { return static_cast<int>(particles_.size()); }
    int num_sites() const { return num_sites_; }
    int num_ancillas() const { return num_ancillas_; }
    bool lattice_layout() const { return lattice_layout_; }

    const Particle& particle(int idx) const { return particles_.at(static_cast<std::size_t>(idx)); }
    std::size_t stride(int idx) const { return strides_.at(static_cast<std::size_t>(idx)); }

    int index_of(const std::string& label) const {
        for (std::size_t i = 0; i < particles_.size(); ++i) {
            if (particles_[i].label == label) {
                return static_cast<int>(i);
            }
        }
        throw std::invalid_argument("unknown particle label: " + label);
    }

    // Particle index of lattice site j (1-based) respectively ancilla k.
    int site_index(int j) const {
        if (!lattice_layout_ || j < 1 || j > num_sites_) {
            throw std::invalid_argument("site index out of range: " + std::to_string(j));
        }
        return num_ancillas_ + j - 1;
    }
    int ancilla_index(int k) const {
        if (k < 1 || k > num_ancillas_) {
            throw std::invalid_argument("ancilla index out of range: " + std::to_string(k));
        }
        return k - 1;
    }

    int digit(std::size_t amp_index, int particle_idx) const {
        const std::size_t s = strides_[static_cast<std::size_t>(particle_idx)];
        const int d = particles_[static_cast<std::size_t>(particle_idx)].dimension;
        return static_cast<int>((amp_index / s) % static_cast<std::size_t>(d));
    }

    std::size_t encode(const std::vector<int>& levels) const {
        if (levels.size() != particles_.size()) {
            throw std::invalid_argument("one level per particle required");
        }
        std::size_t idx = 0;
        for (std::size_t p = 0; p < particles_.size(); ++p) {
            if (levels[p] < 0 || levels[p] >= particles_[p].dimension) {
                throw std::invalid_argument("level out of range for particle " + particles_[p].label);
            }
            idx += static_cast<std::size_t>(levels[p]) * strides_[p];
        }
        return idx;
    }

    std::vector<int> decode(std::size_t amp_index) const {
        std::vector<int> levels(particles_.size());
        for (std::size_t p = 0; p < particles_.size(); ++p) {
            levels[p] = digit(amp_index, static_cast<int>(p));
        }
        return levels;
    }

    friend bool operator==(const Register& lhs, const Register& rhs) {
        if (lhs.particles_.size() != rhs.particles_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < lhs.particles_.size(); ++i) {
            const Particle& a = lhs.particles_[i];
            const Particle& b = rhs.particles_[i];
            if (a.label != b.label || a.dimension != b.dimension || a.role != b.role) {
                return false;
            }
        }
        return true;
    }
    friend bool operator!=(const Register& lhs, const Register& rhs) { return !(lhs == rhs); }

  private:
    bool detect_lattice_layout() const {
        // Ancillas (all qutrits) must precede sites (all qubits).
        bool seen_site = false;
        for (const Particle& p : particles_) {
            if (p.role == Role::Site) {
                seen_site = true;
                if (p.dimension != 2) {
                    return false;
                }
            } else {
                if (seen_site || p.dimension != 3) {
                    return false;
                }
            }
        }
        return num_sites_ > 0;
    }

    std::vector<Particle> particles_;
    std::vector<std::size_t> strides_;
    std::size_t dimension_ = 0;
    int num_sites_ = 0;
    int num_ancillas_ = 0;
    bool lattice_layout_ = false;
};

}  // namespace lattice_teleport
