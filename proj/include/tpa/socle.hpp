#ifndef tpa_socle_hpp
#define tpa_socle_hpp

#include <vector>

#include "tpa/dim_vector.hpp"
#include "tpa/errors.hpp"
#include "tpa/layers.hpp"
#include "tpa/quiver.hpp"

namespace tpa {

/*
 * Generic socle data of Rep S for a realizable radical layering S over a
 * truncated path algebra. Nothing in this header needs the quiver to be
 * acyclic.
 *
 * Two independent routes compute dim soc(J^{L-m} G) for a generic module G:
 *   - the inf/complement recursion producing the C_l (c_layers)
 *   - the running sup of the boundary vectors (partial_vectors)
 * They must agree for every m.
 */

// dim E_1(T) = dim T * A
inline DimVector e1_dim(const DimVector& t, const Quiver& q) {
    return transpose_adjacency(q).apply(t);
}

// All vectors below are indexed by layer l = 0..L.
struct SocleWork {
    std::vector<DimVector> sprime;   // S'_l, the part of S_l absorbed by an essential extension
    std::vector<DimVector> d;        // D_l
    std::vector<DimVector> c;        // C_l = S_l - S'_l
    std::vector<DimVector> partials; // boundary vectors, may be negative
    // radical_power_socles[m] = dim soc(J^{L-m} G) = C_L + ... + C_{L-m}
    std::vector<DimVector> radical_power_socles;
};

namespace detail {

inline void require_realizable(const SemisimpleSequence& s, const Quiver& q) {
    if (!is_realizable(s, q)) {
        throw input_error("semisimple sequence " + s.str() + " is not realizable");
    }
}

}

// partials[l] = sum_{l <= k <= L} (S_k - S_{k+1} * A), with S_{L+1} = 0
inline std::vector<DimVector> partial_vectors(const SemisimpleSequence& s, const Quiver& q) {
    if (s.width() != q.vertex_count()) {
        throw input_error("sequence width does not match the quiver");
    }
    const AdjMatrix a = transpose_adjacency(q);
    const size_t L = s.loewy_bound();
    std::vector<DimVector> partials(s.layer_count(), DimVector(s.width()));
    DimVector running(s.width());
    for (size_t k = L + 1; k-- > 0;) {
        running += s[k];
        if (k < L) {
            running -= a.apply(s[k + 1]);
        }
        partials[k] = running;
    }
    return partials;
}

// dim soc(J^{L-m} G) as the sup of partials[L], ..., partials[L-m]
inline DimVector socle_of_radical_power(const std::vector<DimVector>& partials, size_t m) {
    const size_t L = partials.size() - 1;
    DimVector best = partials[L];
    for (size_t j = 1; j <= m; ++j) {
        best = sup(best, partials[L - j]);
    }
    return best;
}

inline DimVector generic_socle(const SemisimpleSequence& s, const Quiver& q) {
    detail::require_realizable(s, q);
    auto partials = partial_vectors(s, q);
    return socle_of_radical_power(partials, partials.size() - 1);
}

inline SocleWork c_layers(const SemisimpleSequence& s, const Quiver& q) {
    detail::require_realizable(s, q);
    const AdjMatrix a = transpose_adjacency(q);
    const size_t n = s.width();
    const size_t L = s.loewy_bound();

    SocleWork work;
    work.sprime.assign(L + 1, DimVector(n));
    work.d.assign(L + 1, DimVector(n));
    work.c.assign(L + 1, DimVector(n));
    work.partials = partial_vectors(s, q);

    // S'_L = D_L = 0; going down, E_1(S_{l+1}) + D_{l+1} splits into S'_l + D_l
    work.c[L] = s[L];
    for (size_t l = L; l-- > 0;) {
        DimVector envelope = a.apply(s[l + 1]) + work.d[l + 1];
        work.sprime[l] = inf(s[l], envelope);
        work.d[l] = envelope - work.sprime[l];
        work.c[l] = s[l] - work.sprime[l];
    }

    DimVector running(n);
    for (size_t m = 0; m <= L; ++m) {
        running += work.c[L - m];
        work.radical_power_socles.push_back(running);
    }
    return work;
}

/*
 * S*_0 is the sum of the C_l. The socle quotient generically has radical
 * layering (S_l - C_l)_{l < L}, re-padded with a zero layer, and its generic
 * socle layering is (S*_1, ..., S*_L, 0); recurse until nothing is left.
 */
inline SemisimpleSequence generic_socle_layering(const SemisimpleSequence& s, const Quiver& q) {
    detail::require_realizable(s, q);
    const size_t n = s.width();
    const size_t L = s.loewy_bound();
    SemisimpleSequence result(L + 1, n);
    SemisimpleSequence current = s;
    for (size_t k = 0; k <= L && !current.is_zero(); ++k) {
        SocleWork work = c_layers(current, q);
        DimVector socle(n);
        for (const auto& c : work.c) {
            socle += c;
        }
        result[k] = socle;
        SemisimpleSequence quotient(L + 1, n);
        for (size_t l = 0; l < L; ++l) {
            quotient[l] = current[l] - work.c[l];
        }
        current = std::move(quotient);
    }
    if (!current.is_zero()) {
        // C_L = S_L on every pass, so L+1 passes always exhaust the sequence
        throw std::logic_error("socle recursion did not exhaust " + s.str());
    }
    return result;
}

}

#endif /* tpa_socle_hpp */
