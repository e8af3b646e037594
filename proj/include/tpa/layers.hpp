#ifndef tpa_layers_hpp
#define tpa_layers_hpp

#include <string>
#include <type_traits>
#include <vector>

#include "tpa/dim_vector.hpp"
#include "tpa/errors.hpp"
#include "tpa/quiver.hpp"

namespace tpa {

/*
 * (S_0, ..., S_L), always stored at full length L+1 with explicit trailing
 * zero layers.
 */
class SemisimpleSequence {
public:
    SemisimpleSequence() = default;
    // L+1 zero layers of width n
    SemisimpleSequence(size_t layer_count, size_t n) : layers_(layer_count, DimVector(n)) {}
    explicit SemisimpleSequence(std::vector<DimVector> layers) : layers_(std::move(layers)) {
        for (const auto& layer : layers_) {
            if (layer.size() != width()) {
                throw input_error("layers of a semisimple sequence must have equal length");
            }
        }
    }
    SemisimpleSequence(std::initializer_list<DimVector> layers)
        : SemisimpleSequence(std::vector<DimVector>(layers)) {}

    size_t layer_count() const { return layers_.size(); }
    // L, for a sequence of length L+1
    size_t loewy_bound() const { return layers_.empty() ? 0 : layers_.size() - 1; }
    size_t width() const { return layers_.empty() ? 0 : layers_.front().size(); }

    DimVector& operator[](size_t l) { return layers_[l]; }
    const DimVector& operator[](size_t l) const { return layers_[l]; }
    const std::vector<DimVector>& layers() const { return layers_; }

    DimVector total() const {
        DimVector t(width());
        for (const auto& layer : layers_) {
            t += layer;
        }
        return t;
    }

    // dim of S_0 + ... + S_l
    DimVector prefix(size_t l) const {
        DimVector t(width());
        for (size_t j = 0; j <= l && j < layers_.size(); ++j) {
            t += layers_[j];
        }
        return t;
    }

    bool is_zero() const {
        for (const auto& layer : layers_) {
            if (!layer.is_zero()) {
                return false;
            }
        }
        return true;
    }

    // number of layers up to the last nonzero one
    size_t clipped_length() const {
        size_t len = layers_.size();
        while (len > 0 && layers_[len - 1].is_zero()) {
            --len;
        }
        return len;
    }

    friend bool operator==(const SemisimpleSequence&, const SemisimpleSequence&) = default;
    friend auto operator<=>(const SemisimpleSequence&, const SemisimpleSequence&) = default;

    std::string str() const {
        std::string s = "(";
        for (size_t l = 0; l < layers_.size(); ++l) {
            s += (l ? ", " : "") + layers_[l].str();
        }
        return s + ")";
    }

private:
    std::vector<DimVector> layers_;
};

struct LayeredPair {
    SemisimpleSequence rad;
    SemisimpleSequence soc;

    friend bool operator==(const LayeredPair&, const LayeredPair&) = default;
};

// S <= S' iff every prefix sum of S is contained in the one of S'. Only
// defined for sequences with the same dimension vector.
inline bool dominance_leq(const SemisimpleSequence& s, const SemisimpleSequence& t) {
    if (s.layer_count() != t.layer_count()) {
        throw input_error("dominance comparison of sequences with different lengths");
    }
    if (s.total() != t.total()) {
        throw input_error("dominance comparison across different dimension vectors: "
                          + s.total().str() + " vs " + t.total().str());
    }
    DimVector ps(s.width());
    DimVector pt(t.width());
    for (size_t l = 0; l < s.layer_count(); ++l) {
        ps += s[l];
        pt += t[l];
        if (!ps.leq(pt)) {
            return false;
        }
    }
    return true;
}

inline bool pair_leq(const LayeredPair& p, const LayeredPair& q) {
    return dominance_leq(p.rad, q.rad) && dominance_leq(p.soc, q.soc);
}

// realizability criterion: S_{l+1} <= S_l * B for all l < L
inline bool is_realizable(const SemisimpleSequence& s, const AdjMatrix& b) {
    for (size_t l = 0; l + 1 < s.layer_count(); ++l) {
        if (!s[l + 1].leq(b.apply(s[l]))) {
            return false;
        }
    }
    return true;
}

inline bool is_realizable(const SemisimpleSequence& s, const Quiver& q) {
    if (s.width() != q.vertex_count()) {
        throw input_error("sequence width does not match the quiver");
    }
    return is_realizable(s, adjacency(q));
}

namespace detail {

class RealizableEnumerator {
public:
    RealizableEnumerator(const Quiver& q, const DimVector& d, size_t L)
        : b_(adjacency(q)), d_(d), seq_(L + 1, q.vertex_count()) {
        if (d.size() != q.vertex_count()) {
            throw input_error("dimension vector has length " + std::to_string(d.size())
                              + " but the quiver has " + std::to_string(q.vertex_count()) + " vertices");
        }
        if (!d.is_nonnegative()) {
            throw input_error("dimension vector has negative entries");
        }
    }

    template <class Visit>
    void run(Visit&& visit) {
        stopped_ = false;
        descend(0, d_, visit);
    }

private:
    // upper bound on the total mass that layers l+1..L can still absorb
    DimVector capacity(const DimVector& layer, size_t steps) const {
        DimVector total(layer.size());
        DimVector power = layer;
        for (size_t k = 0; k < steps; ++k) {
            power = b_.apply(power);
            if (power.is_zero()) {
                break;
            }
            total += power;
        }
        return total;
    }

    template <class Visit>
    bool emit(Visit& visit) {
        if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const SemisimpleSequence&>, bool>) {
            return visit(static_cast<const SemisimpleSequence&>(seq_));
        } else {
            visit(static_cast<const SemisimpleSequence&>(seq_));
            return true;
        }
    }

    template <class Visit>
    void descend(size_t l, const DimVector& remaining, Visit& visit) {
        const size_t L = seq_.loewy_bound();
        DimVector bound = l == 0 ? remaining : inf(remaining, b_.apply(seq_[l - 1]));
        if (l == L) {
            if (remaining.leq(bound)) {
                seq_[l] = remaining;
                if (!emit(visit)) {
                    stopped_ = true;
                }
                seq_[l] = DimVector(remaining.size());
            }
            return;
        }
        DimVector& layer = seq_[l];
        layer = DimVector(remaining.size());
        // odometer over 0 <= layer <= bound, lexicographic
        while (true) {
            DimVector rest = remaining - layer;
            if (rest.leq(capacity(layer, L - l))) {
                descend(l + 1, rest, visit);
                if (stopped_) {
                    return;
                }
            }
            size_t i = layer.size();
            while (true) {
                if (i == 0) {
                    return;
                }
                --i;
                if (layer[i] < bound[i]) {
                    ++layer[i];
                    break;
                }
                layer[i] = 0;
            }
        }
    }

    AdjMatrix b_;
    DimVector d_;
    SemisimpleSequence seq_;
    bool stopped_ = false;
};

}

/*
 * Visits every realizable sequence of length L+1 with total d exactly once, in
 * lexicographic order of the flattened layers. The visitor may return false to
 * stop early.
 */
template <class Visit>
void enumerate_realizable(const Quiver& q, const DimVector& d, size_t L, Visit&& visit) {
    detail::RealizableEnumerator(q, d, L).run(visit);
}

inline std::vector<SemisimpleSequence> realizable_sequences(const Quiver& q, const DimVector& d, size_t L) {
    std::vector<SemisimpleSequence> out;
    enumerate_realizable(q, d, L, [&](const SemisimpleSequence& s) { out.push_back(s); });
    return out;
}

}

#endif /* tpa_layers_hpp */
