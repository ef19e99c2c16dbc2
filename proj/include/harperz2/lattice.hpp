// lattice.hpp — model parameters and the periodic site modulation

#pragma once

#include "harperz2/core.hpp"

#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

namespace harperz2 {

// Reduced rational flux p/q.
struct Rational {
    int p{1};
    int q{1};

    Rational() = default;

    Rational(int num, int den) : p(num), q(den) {
        if (q < 1) throw std::invalid_argument("Rational: denominator must be >= 1");
        if (std::gcd(std::abs(p), q) != 1)
            throw std::invalid_argument("Rational: p and q must be coprime");
    }

    double value() const { return static_cast<double>(p) / static_cast<double>(q); }

    bool operator==(const Rational&) const = default;

    // Parses "p/q" or a bare integer.
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoi(text), 1);
            return Rational(std::stoi(text.substr(0, slash)), std::stoi(text.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("Rational: value out of range in '" + text + "'");
        }
    }

    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
};

enum class Spin { Up, Down };

inline double spin_sign(Spin s) { return s == Spin::Up ? 1.0 : -1.0; }
inline Spin other_spin(Spin s) { return s == Spin::Up ? Spin::Down : Spin::Up; }
inline const char* spin_name(Spin s) { return s == Spin::Up ? "up" : "down"; }

enum class Boundary { Open, Periodic, Twisted };

// Parameters of the modulated chain. Sites are indexed n = 1..N.
struct LatticeParams {
    int sites{80};
    Rational beta{1, 3};
    double lambda{15.0};   // modulation strength, units of the hopping
    double hopping{1.0};   // t, the energy reference
    double phi{0.0};       // synthetic momentum
    Boundary boundary{Boundary::Open};
    double twist{0.0};     // boundary angle theta, used when boundary == Twisted
    Spin spin{Spin::Up};

    void validate() const {
        if (sites < 2) throw std::invalid_argument("LatticeParams: need at least 2 sites");
        if (lambda < 0.0) throw std::invalid_argument("LatticeParams: lambda must be >= 0");
        if (hopping <= 0.0) throw std::invalid_argument("LatticeParams: hopping must be > 0");
        if (boundary != Boundary::Open && sites % beta.q != 0)
            throw std::invalid_argument(
                "LatticeParams: ring size must be a multiple of q for commensurate modulation");
    }

    LatticeParams with_phi(double value) const {
        LatticeParams out = *this;
        out.phi = value;
        return out;
    }

    LatticeParams with_spin(Spin value) const {
        LatticeParams out = *this;
        out.spin = value;
        return out;
    }
};

// 2*pi*beta*n reduced exactly through the integer part: keeps cos/sin accurate
// for any site index and makes structural zeros (q = 2) come out as zeros.
inline double site_phase(const Rational& beta, long n) {
    const long q = beta.q;
    long r = (static_cast<long>(beta.p) * n) % q;
    if (r < 0) r += q;
    return two_pi * static_cast<double>(r) / static_cast<double>(q);
}

// Per-site effective parameters of the driven optomechanical cell.
struct SiteModulation {
    int site{0};
    double detuning{0.0};       // Delta_n
    double coupling{0.0};       // G_n
    double omega_a_site{0.0};   // on-site energy of the symmetric mode, -Delta_n - G_n
    double omega_b_site{0.0};   // on-site energy of the antisymmetric mode, -Delta_n + G_n
};

// Delta_n = -lambda cos(2 pi beta n) cos(phi), G_n = lambda sin(2 pi beta n) sin(phi).
inline SiteModulation modulation_profile(const LatticeParams& params, int n) {
    if (n < 1 || n > params.sites)
        throw std::out_of_range("modulation_profile: site index out of range");
    const double angle = site_phase(params.beta, n);
    SiteModulation m;
    m.site = n;
    m.detuning = -params.lambda * std::cos(angle) * std::cos(params.phi);
    m.coupling = params.lambda * std::sin(angle) * std::sin(params.phi);
    m.omega_a_site = -m.detuning - m.coupling;
    m.omega_b_site = -m.detuning + m.coupling;
    return m;
}

// Microscopic per-cell inputs. Mean cavity amplitudes are supplied directly;
// the chain-level physics only ever sees G_n = g_n * |alpha_n|.
struct OptomechParams {
    std::vector<double> omega_a;    // cavity frequencies
    std::vector<double> omega_b;    // mechanical frequencies
    std::vector<double> omega_p;    // drive frequencies
    std::vector<double> g;          // single-photon couplings
    std::vector<Complex> alpha;     // mean cavity amplitudes
    std::vector<double> J;          // inter-cavity hoppings
    double kappa{0.0};              // cavity decay
    double gamma{0.0};              // mechanical damping

    int cells() const { return static_cast<int>(omega_a.size()); }

    void validate() const {
        const std::size_t n = omega_a.size();
        if (n == 0) throw std::invalid_argument("OptomechParams: empty array");
        if (omega_b.size() != n || omega_p.size() != n || g.size() != n || alpha.size() != n ||
            J.size() != n)
            throw std::invalid_argument("OptomechParams: per-site arrays must have equal length");
        for (double j : J)
            if (j <= 0.0) throw std::invalid_argument("OptomechParams: J must be > 0");
        if (kappa < 0.0 || gamma < 0.0)
            throw std::invalid_argument("OptomechParams: decay rates must be >= 0");
    }

    double detuning(int n) const { return omega_p.at(static_cast<std::size_t>(n - 1)) - omega_a.at(static_cast<std::size_t>(n - 1)); }
    double effective_coupling(int n) const {
        return g.at(static_cast<std::size_t>(n - 1)) * std::abs(alpha.at(static_cast<std::size_t>(n - 1)));
    }

    // Realizes the chain-level modulation microscopically: drives detuned by
    // Delta_n, couplings g_n carrying G_n with unit amplitudes, J_n = 2t, and
    // mechanical frequencies on the red-detuned point omega_b = -Delta_n.
    static OptomechParams from_lattice(const LatticeParams& params, double cavity_frequency,
                                       double kappa = 0.0, double gamma = 0.0) {
        params.validate();
        OptomechParams opt;
        const int n_sites = params.sites;
        opt.omega_a.assign(static_cast<std::size_t>(n_sites), cavity_frequency);
        opt.omega_b.resize(static_cast<std::size_t>(n_sites));
        opt.omega_p.resize(static_cast<std::size_t>(n_sites));
        opt.g.resize(static_cast<std::size_t>(n_sites));
        opt.alpha.assign(static_cast<std::size_t>(n_sites), Complex(1.0, 0.0));
        opt.J.assign(static_cast<std::size_t>(n_sites), 2.0 * params.hopping);
        opt.kappa = kappa;
        opt.gamma = gamma;
        for (int n = 1; n <= n_sites; ++n) {
            const SiteModulation m = modulation_profile(params, n);
            const std::size_t i = static_cast<std::size_t>(n - 1);
            opt.omega_p[i] = cavity_frequency + m.detuning;
            opt.g[i] = m.coupling;
            opt.omega_b[i] = -m.detuning;
        }
        return opt;
    }
};

}  // namespace harperz2
