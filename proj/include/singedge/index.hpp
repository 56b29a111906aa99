#pragma once

#include <stdexcept>

#include "singedge/params.hpp"

namespace singedge {

enum class ConnectionKind { abelian, irreducible };

// Limiting flat connection on the cross-section, carrying only what the index
// bookkeeping needs: the dimension of its isotropy group.
struct LimitingConnection {
    ConnectionKind kind = ConnectionKind::abelian;
    int isotropy_dim() const { return kind == ConnectionKind::abelian ? 1 : 0; }
};

// The product connection; abelian, isotropy dimension 1.
inline constexpr LimitingConnection theta_connection{ConnectionKind::abelian};

// Topology of the ambient pair entering the deformation complex dimension.
struct SurfacePairTopology {
    long long k = 0;        // instanton number
    long long l = 0;        // monopole number
    long long b1 = 0;       // first Betti number
    long long b2_plus = 0;  // dimension of the positive-definite part of H^2
    long long genus = 0;    // genus of the embedded surface
    long long self_int = 0; // self-intersection of the surface
};

struct GaugeTransformDegrees {
    long long deg = 0;          // degree over the ambient manifold
    long long deg_restricted = 0;  // degree of the restriction to the surface
};

inline void check_nonnegative(const SurfacePairTopology& t) {
    if (t.b1 < 0 || t.b2_plus < 0 || t.genus < 0)
        throw std::invalid_argument("topology counts must be nonnegative");
}

// Expected dimension of the moduli space of singular anti-self-dual
// connections: 8k + 4l - 3(b2+ - b1 + 1) - (2g - 2).
inline long long asd_dimension(const SurfacePairTopology& t) {
    check_nonnegative(t);
    return 8 * t.k + 4 * t.l - 3 * (t.b2_plus - t.b1 + 1) - (2 * t.genus - 2);
}

// Holonomy-weighted action k + 2 alpha l - alpha^2 (S . S); exact rational on
// rational alpha.
inline Scalar chern_weil_action(long long k, long long l, const HolonomyParam& alpha,
                                long long self_int) {
    const Scalar& a = alpha.value();
    return Scalar(k) + Scalar(2) * a * Scalar(l) - a * a * Scalar(self_int);
}

// Change of the Chern-Simons value under a gauge transformation of the given
// degrees: cs + deg - 2 alpha deg_restricted.
inline Scalar cs_gauge_shift(const Scalar& cs, const HolonomyParam& alpha,
                             const GaugeTransformDegrees& d) {
    return cs + Scalar(d.deg) - Scalar(2) * alpha.value() * Scalar(d.deg_restricted);
}

// Translation-invariant index after gluing a cylindrical end along the given
// limiting connection: the isotropy of the limit is absorbed.
inline long long glue_index(long long ind, const LimitingConnection& limiting) {
    return ind - limiting.isotropy_dim();
}

// Index shift under a degree-(a, b) gauge transformation on the cylinder.
inline long long gauge_index_shift(long long ind, const GaugeTransformDegrees& d) {
    return ind + 8 * d.deg - 4 * d.deg_restricted;
}

// The two shift computations must agree: 8a - 4b equals the dimension formula
// evaluated on (k, l) = (a, -b) over the product cylinder topology.
inline bool gauge_shift_crosscheck(const GaugeTransformDegrees& d) {
    SurfacePairTopology t;
    t.k = d.deg;
    t.l = -d.deg_restricted;
    t.b1 = 1;
    t.b2_plus = 0;
    t.genus = 1;
    return 8 * d.deg - 4 * d.deg_restricted == asd_dimension(t);
}

// Relative grading between two limiting connections.
inline long long mu_tilde_pair(long long ind, const LimitingConnection& a,
                               const LimitingConnection& b) {
    return ind - a.isotropy_dim() - b.isotropy_dim();
}

// Additivity of the relative grading across an intermediate limit b.
inline long long mu_compose(long long mu_ab, long long mu_bc,
                            const LimitingConnection& b) {
    return mu_ab + mu_bc + b.isotropy_dim();
}

// Absolute grading from the relative grading against the product connection.
inline long long mu_tilde_of(long long mu_theta_a, const LimitingConnection& a) {
    return mu_theta_a + a.isotropy_dim();
}

inline int grading_mod4(long long mu_tilde) {
    return static_cast<int>(((mu_tilde % 4) + 4) % 4);
}

}  // namespace singedge
