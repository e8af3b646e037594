#ifndef tpa_dim_vector_hpp
#define tpa_dim_vector_hpp

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tpa/errors.hpp"

namespace tpa {

/*
 * Dimension vectors of semisimple modules. Entry i is the multiplicity of the
 * simple S_{i+1}. Intermediate quantities (the boundary vectors of the socle
 * formula) can go negative, so the entries are signed; DimVector itself is
 * expected to stay nonnegative and `is_nonnegative` checks that.
 */
using Entry = int64_t;

class DimVector {
public:
    DimVector() = default;
    explicit DimVector(size_t n, Entry fill = 0) : entries_(n, fill) {}
    DimVector(std::initializer_list<Entry> init) : entries_(init) {}
    explicit DimVector(std::vector<Entry> entries) : entries_(std::move(entries)) {}

    static DimVector unit(size_t n, size_t i) {
        DimVector v(n);
        v[i] = 1;
        return v;
    }

    size_t size() const { return entries_.size(); }
    Entry& operator[](size_t i) { return entries_[i]; }
    const Entry& operator[](size_t i) const { return entries_[i]; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    const std::vector<Entry>& entries() const { return entries_; }

    Entry total() const { return std::accumulate(entries_.begin(), entries_.end(), Entry(0)); }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](Entry e) { return e == 0; });
    }
    bool is_nonnegative() const {
        return std::all_of(entries_.begin(), entries_.end(), [](Entry e) { return e >= 0; });
    }

    DimVector& operator+=(const DimVector& other) {
        check_size(other);
        for (size_t i = 0; i < size(); ++i) {
            entries_[i] += other[i];
        }
        return *this;
    }
    DimVector& operator-=(const DimVector& other) {
        check_size(other);
        for (size_t i = 0; i < size(); ++i) {
            entries_[i] -= other[i];
        }
        return *this;
    }
    friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
    friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }

    friend bool operator==(const DimVector&, const DimVector&) = default;
    friend auto operator<=>(const DimVector&, const DimVector&) = default;

    // componentwise containment of semisimples
    bool leq(const DimVector& other) const {
        check_size(other);
        for (size_t i = 0; i < size(); ++i) {
            if (entries_[i] > other[i]) {
                return false;
            }
        }
        return true;
    }

    std::string str() const {
        std::ostringstream out;
        out << '(';
        for (size_t i = 0; i < size(); ++i) {
            out << (i ? "," : "") << entries_[i];
        }
        out << ')';
        return out.str();
    }

    void check_size(const DimVector& other) const {
        if (other.size() != size()) {
            throw input_error("dimension vector length mismatch: " + std::to_string(size())
                              + " vs " + std::to_string(other.size()));
        }
    }

private:
    std::vector<Entry> entries_;
};

inline std::ostream& operator<<(std::ostream& out, const DimVector& v) {
    return out << v.str();
}

// join in the lattice of semisimples
inline DimVector sup(const DimVector& u, const DimVector& v) {
    u.check_size(v);
    DimVector r(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
        r[i] = std::max(u[i], v[i]);
    }
    return r;
}

// meet in the lattice of semisimples
inline DimVector inf(const DimVector& u, const DimVector& v) {
    u.check_size(v);
    DimVector r(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
        r[i] = std::min(u[i], v[i]);
    }
    return r;
}

// parses "0,1,1,0,3" (whitespace tolerated)
inline DimVector parse_dim_vector(const std::string& text) {
    std::vector<Entry> entries;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        if (token.empty()) {
            throw input_error("empty entry in dimension vector '" + text + "'");
        }
        size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw input_error("bad entry '" + token + "' in dimension vector");
        }
        if (used != token.size() || value < 0) {
            throw input_error("bad entry '" + token + "' in dimension vector");
        }
        entries.push_back(value);
    }
    if (entries.empty()) {
        throw input_error("empty dimension vector");
    }
    return DimVector(std::move(entries));
}

}

#endif /* tpa_dim_vector_hpp */
