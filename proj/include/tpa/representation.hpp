#ifndef tpa_representation_hpp
#define tpa_representation_hpp

#include <string>
#include <vector>

#include "json.hpp"

#include "tpa/dim_vector.hpp"
#include "tpa/errors.hpp"
#include "tpa/layers.hpp"
#include "tpa/prime_field.hpp"
#include "tpa/quiver.hpp"

namespace tpa {

/*
 * A concrete representation of Q over F_p: one vector space per vertex and one
 * matrix per arrow, of shape dim(target) x dim(source). Matrices are indexed
 * like the quiver's arrows.
 */
struct Representation {
    PrimeField field;
    Quiver quiver;
    DimVector dims;
    std::vector<Matrix> maps;

    Representation(PrimeField f, Quiver q, DimVector d)
        : field(f), quiver(std::move(q)), dims(std::move(d)) {
        if (field.prime() <= (1ull << 20)) {
            throw input_error("representations need a prime above 2^20, got " + std::to_string(field.prime()));
        }
        if (dims.size() != quiver.vertex_count() || !dims.is_nonnegative()) {
            throw input_error("representation dimension vector does not fit the quiver");
        }
        for (const Arrow& a : quiver.arrows()) {
            maps.emplace_back(size_t(dims[a.target]), size_t(dims[a.source]));
        }
    }

    const Matrix& map(size_t arrow) const { return maps[arrow]; }

    void set_map(size_t arrow, Matrix m) {
        const Arrow& a = quiver.arrow(arrow);
        if (m.rows() != size_t(dims[a.target]) || m.cols() != size_t(dims[a.source])) {
            throw input_error("matrix for arrow '" + a.name + "' has the wrong shape");
        }
        maps[arrow] = std::move(m);
    }
};

namespace detail {

inline Matrix full_space(size_t n) {
    return Matrix::identity(n);
}

inline void require_module(bool ok, size_t L) {
    if (!ok) {
        throw input_error("representation is not annihilated by paths of length "
                          + std::to_string(L + 1));
    }
}

// row bases of J^0 M, J^1 M, ..., J^{L+1} M at every vertex
inline std::vector<std::vector<Matrix>> radical_chain(const Representation& m, size_t L) {
    const Quiver& q = m.quiver;
    std::vector<std::vector<Matrix>> chain;
    std::vector<Matrix> current;
    for (size_t v = 0; v < q.vertex_count(); ++v) {
        current.push_back(full_space(size_t(m.dims[v])));
    }
    chain.push_back(current);
    for (size_t l = 0; l <= L; ++l) {
        std::vector<Matrix> next;
        for (size_t v = 0; v < q.vertex_count(); ++v) {
            next.emplace_back(0, size_t(m.dims[v]));
        }
        for (size_t a = 0; a < q.arrow_count(); ++a) {
            const Arrow& arrow = q.arrow(a);
            // rows of basis * M_a^T are the images of the basis vectors
            Matrix images = current[arrow.source].multiply(m.map(a).transposed(), m.field);
            next[arrow.target].append_rows(images);
        }
        for (auto& space : next) {
            space = row_basis(std::move(space), m.field);
        }
        chain.push_back(next);
        current = std::move(next);
    }
    return chain;
}

}

// layer l = dim J^l M - dim J^{l+1} M
inline SemisimpleSequence radical_layering(const Representation& m, size_t L) {
    auto chain = detail::radical_chain(m, L);
    const size_t n = m.quiver.vertex_count();
    SemisimpleSequence s(L + 1, n);
    for (size_t l = 0; l <= L; ++l) {
        for (size_t v = 0; v < n; ++v) {
            s[l][v] = Entry(chain[l][v].rows()) - Entry(chain[l + 1][v].rows());
        }
    }
    bool zero = true;
    for (const auto& space : chain[L + 1]) {
        zero = zero && space.rows() == 0;
    }
    detail::require_module(zero, L);
    return s;
}

/*
 * soc_l M = ann_M J^{l+1}, computed through K_0 = intersection of the arrow
 * kernels and K_{j+1} = {x : M_a x in K_j for every arrow a}. Each K_j(v) is
 * carried as the kernel of a stacked matrix, so only ranks are needed.
 */
inline SemisimpleSequence socle_layering(const Representation& m, size_t L) {
    const Quiver& q = m.quiver;
    const size_t n = q.vertex_count();
    // kernel of constraint[v] is K_{j-1}(v); start from K_{-1} = 0
    std::vector<Matrix> constraint;
    for (size_t v = 0; v < n; ++v) {
        constraint.push_back(detail::full_space(size_t(m.dims[v])));
    }
    SemisimpleSequence s(L + 1, n);
    DimVector previous(n);
    for (size_t j = 0; j <= L; ++j) {
        std::vector<Matrix> next;
        for (size_t v = 0; v < n; ++v) {
            Matrix stacked(0, size_t(m.dims[v]));
            for (size_t a : q.out_arrows(v)) {
                stacked.append_rows(constraint[q.arrow(a).target].multiply(m.map(a), m.field));
            }
            next.push_back(row_basis(std::move(stacked), m.field));
        }
        DimVector kernel_dims(n);
        for (size_t v = 0; v < n; ++v) {
            kernel_dims[v] = m.dims[v] - Entry(next[v].rows());
        }
        s[j] = kernel_dims - previous;
        previous = kernel_dims;
        constraint = std::move(next);
    }
    detail::require_module(previous == m.dims, L);
    return s;
}

/*
 * dim End(M): nullity of the system f_{t(a)} M_a = M_a f_{s(a)} in the
 * unknown vertex endomorphisms f_v.
 */
inline size_t endo_dim(const Representation& m) {
    const Quiver& q = m.quiver;
    const PrimeField& f = m.field;
    const size_t n = q.vertex_count();
    std::vector<size_t> offset(n + 1, 0);
    for (size_t v = 0; v < n; ++v) {
        offset[v + 1] = offset[v] + size_t(m.dims[v] * m.dims[v]);
    }
    size_t equations = 0;
    for (const Arrow& a : q.arrows()) {
        equations += size_t(m.dims[a.target] * m.dims[a.source]);
    }
    Matrix system(equations, offset[n]);
    size_t row = 0;
    for (size_t ai = 0; ai < q.arrow_count(); ++ai) {
        const Arrow& a = q.arrow(ai);
        const Matrix& x = m.map(ai);
        const size_t ds = size_t(m.dims[a.source]);
        const size_t dt = size_t(m.dims[a.target]);
        for (size_t r = 0; r < dt; ++r) {
            for (size_t c = 0; c < ds; ++c, ++row) {
                // (f_t X)[r][c] = sum_k f_t[r][k] X[k][c]
                for (size_t k = 0; k < dt; ++k) {
                    size_t col = offset[a.target] + r * dt + k;
                    system(row, col) = f.add(system(row, col), x(k, c));
                }
                // -(X f_s)[r][c] = -sum_k X[r][k] f_s[k][c]
                for (size_t k = 0; k < ds; ++k) {
                    size_t col = offset[a.source] + k * ds + c;
                    system(row, col) = f.sub(system(row, col), x(r, k));
                }
            }
        }
    }
    return nullity(system, f);
}

// D = Hom(-, K): transposed matrices on the opposite quiver
inline Representation dualize(const Representation& m) {
    Representation d(m.field, opposite(m.quiver), m.dims);
    for (size_t a = 0; a < m.quiver.arrow_count(); ++a) {
        d.set_map(a, m.map(a).transposed());
    }
    return d;
}

/*
 * The submodule J^k M as a representation in its own right, on the reduced
 * row echelon bases of the subspaces J^k M(v).
 */
inline Representation radical_power(const Representation& m, size_t k, size_t L) {
    auto chain = detail::radical_chain(m, std::max(k, L));
    const auto& basis = chain[k];
    const Quiver& q = m.quiver;
    DimVector dims(q.vertex_count());
    for (size_t v = 0; v < q.vertex_count(); ++v) {
        dims[v] = Entry(basis[v].rows());
    }
    Representation sub(m.field, q, dims);
    for (size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arrow = q.arrow(a);
        const Matrix& src = basis[arrow.source];
        const Matrix& dst = basis[arrow.target];
        Matrix images = src.multiply(m.map(a).transposed(), m.field);
        // coordinates in an RREF basis are read off at the pivot columns
        std::vector<size_t> pivots;
        for (size_t r = 0; r < dst.rows(); ++r) {
            size_t c = 0;
            while (dst(r, c) == 0) {
                ++c;
            }
            pivots.push_back(c);
        }
        Matrix coords(dst.rows(), src.rows());
        for (size_t i = 0; i < src.rows(); ++i) {
            for (size_t r = 0; r < dst.rows(); ++r) {
                coords(r, i) = images(i, pivots[r]);
            }
        }
        sub.set_map(a, std::move(coords));
    }
    return sub;
}

inline Representation representation_from_json(const nlohmann::json& doc, const Quiver& q,
                                                uint64_t prime = default_prime) {
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("maps")) {
        throw input_error("representation document needs 'dims' and 'maps'");
    }
    if (doc.contains("prime")) {
        prime = doc.at("prime").get<uint64_t>();
    }
    PrimeField field(prime);
    std::vector<Entry> dims_raw;
    for (const auto& e : doc.at("dims")) {
        if (!e.is_number_integer() || e.get<long long>() < 0) {
            throw input_error("'dims' must hold nonnegative integers");
        }
        dims_raw.push_back(e.get<Entry>());
    }
    Representation m(field, q, DimVector(std::move(dims_raw)));
    const auto& maps = doc.at("maps");
    if (!maps.is_object()) {
        throw input_error("'maps' must be an object keyed by arrow name");
    }
    for (auto it = maps.begin(); it != maps.end(); ++it) {
        if (!q.arrow_index(it.key())) {
            throw input_error("unknown arrow '" + it.key() + "' in representation");
        }
    }
    for (size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arrow = q.arrow(a);
        size_t rows = size_t(m.dims[arrow.target]);
        size_t cols = size_t(m.dims[arrow.source]);
        Matrix mat(rows, cols);
        if (!maps.contains(arrow.name)) {
            if (rows * cols != 0) {
                throw input_error("missing matrix for arrow '" + arrow.name + "'");
            }
            m.set_map(a, mat);
            continue;
        }
        const auto& data = maps.at(arrow.name);
        if (!data.is_array() || data.size() != rows) {
            throw input_error("matrix for arrow '" + arrow.name + "' must have "
                              + std::to_string(rows) + " rows");
        }
        for (size_t r = 0; r < rows; ++r) {
            if (!data[r].is_array() || data[r].size() != cols) {
                throw input_error("matrix for arrow '" + arrow.name + "' must have "
                                  + std::to_string(cols) + " columns");
            }
            for (size_t c = 0; c < cols; ++c) {
                if (!data[r][c].is_number_integer()) {
                    throw input_error("non-integer matrix entry for arrow '" + arrow.name + "'");
                }
                mat(r, c) = field.reduce(data[r][c].get<int64_t>());
            }
        }
        m.set_map(a, std::move(mat));
    }
    return m;
}

inline nlohmann::json representation_to_json(const Representation& m) {
    nlohmann::json maps = nlohmann::json::object();
    for (size_t a = 0; a < m.quiver.arrow_count(); ++a) {
        const Matrix& mat = m.map(a);
        nlohmann::json rows = nlohmann::json::array();
        for (size_t r = 0; r < mat.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (size_t c = 0; c < mat.cols(); ++c) {
                row.push_back(mat(r, c));
            }
            rows.push_back(row);
        }
        maps[m.quiver.arrow(a).name] = rows;
    }
    return {{"prime", m.field.prime()}, {"dims", m.dims.entries()}, {"maps", maps}};
}

}

#endif /* tpa_representation_hpp */
