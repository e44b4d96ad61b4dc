#include "graphyps/polyalg.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace graphyps {

LinearForm LinearForm::var(unsigned v, i64 coeff) {
    LinearForm f;
    f.add_var(v, coeff);
    return f;
}

i64 LinearForm::coeff(unsigned v) const {
    for (auto& [w, c] : terms_)
        if (w == v) return c;
    return 0;
}

void LinearForm::add_var(unsigned v, i64 coeff) {
    if (coeff == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                               [](const auto& t, unsigned x) { return t.first < x; });
    if (it != terms_.end() && it->first == v) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {v, coeff});
    }
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
    LinearForm r(*this);
    r.add_constant(o.constant_);
    for (auto& [v, c] : o.terms_) r.add_var(v, c);
    return r;
}

LinearForm LinearForm::operator-() const {
    LinearForm r;
    r.constant_ = -constant_;
    r.terms_ = terms_;
    for (auto& [v, c] : r.terms_) c = -c;
    return r;
}

MPoly LinearForm::to_mpoly(unsigned nvars) const {
    std::vector<std::pair<std::vector<uint8_t>, i64>> terms;
    if (constant_ != 0) terms.push_back({std::vector<uint8_t>(nvars, 0), constant_});
    for (auto& [v, c] : terms_) {
        if (v >= nvars) fail(Error::Kind::Usage, "linear form variable out of range");
        std::vector<uint8_t> e(nvars, 0);
        e[v] = 1;
        terms.push_back({std::move(e), c});
    }
    return MPoly::from_terms(nvars, std::move(terms));
}

void SymLinMatrix::set(unsigned i, unsigned j, LinearForm f) {
    entries_.at(std::size_t(i) * size_ + j) = f;
    entries_.at(std::size_t(j) * size_ + i) = std::move(f);
}

bool PolyMatrix::is_symmetric() const {
    for (unsigned i = 0; i < size; ++i)
        for (unsigned j = i + 1; j < size; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

PolyMatrix to_poly_matrix(const SymLinMatrix& m) {
    PolyMatrix r(m.size(), m.nvars());
    for (unsigned i = 0; i < m.size(); ++i)
        for (unsigned j = 0; j < m.size(); ++j)
            r.at(i, j) = m(i, j).to_mpoly(m.nvars());
    return r;
}

MPoly det(const PolyMatrix& m) {
    unsigned n = m.size;
    if (n > 14) fail(Error::Kind::Bound, "determinant expansion limited to 14x14");
    if (n == 0) return MPoly::constant(m.nvars, 1);

    // layer r holds the minors over rows 0..r-1 and every column subset of
    // size r with a nonzero determinant
    std::unordered_map<uint32_t, MPoly> layer;
    layer.emplace(0u, MPoly::constant(m.nvars, 1));
    for (unsigned r = 0; r < n; ++r) {
        // candidate targets: source mask | one column with a nonzero entry in row r
        std::vector<uint32_t> row_cols;
        for (unsigned j = 0; j < n; ++j)
            if (!m.at(r, j).is_zero()) row_cols.push_back(j);
        std::unordered_map<uint32_t, char> targets;
        for (auto& [mask, poly] : layer) {
            (void)poly;
            for (uint32_t j : row_cols)
                if (!(mask >> j & 1)) targets.emplace(mask | (1u << j), 0);
        }
        std::unordered_map<uint32_t, MPoly> next;
        next.reserve(targets.size());
        for (auto& [mask, unused] : targets) {
            (void)unused;
            std::vector<MPoly::ScaledShift> streams;
            unsigned pos = 0;
            for (unsigned j = 0; j < n; ++j) {
                if (!(mask >> j & 1)) continue;
                const MPoly& entry = m.at(r, j);
                auto it = layer.find(mask & ~(1u << j));
                if (it != layer.end() && !entry.is_zero()) {
                    i64 sign = ((r + pos) % 2 == 0) ? 1 : -1;
                    for (std::size_t t = 0; t < entry.nterms(); ++t)
                        streams.push_back({&it->second, entry.exps(t),
                                           checked_mul(sign, entry.coef(t))});
                }
                ++pos;
            }
            MPoly val = MPoly::merge_scaled_shifted(m.nvars, streams);
            if (!val.is_zero()) next.emplace(mask, std::move(val));
        }
        layer = std::move(next);
        if (layer.empty()) return MPoly(m.nvars);
    }
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    auto it = layer.find(full);
    return it == layer.end() ? MPoly(m.nvars) : it->second;
}

MPoly det(const SymLinMatrix& m) { return det(to_poly_matrix(m)); }

PolyMatrix remove_rows_cols(const PolyMatrix& m, const std::vector<int>& rows,
                            const std::vector<int>& cols) {
    if (rows.size() != cols.size())
        fail(Error::Kind::Usage, "minor needs equally many rows and columns removed");
    auto keep = [&](const std::vector<int>& removed, unsigned n) {
        std::vector<unsigned> k;
        for (unsigned i = 0; i < n; ++i)
            if (!std::binary_search(removed.begin(), removed.end(), int(i))) k.push_back(i);
        return k;
    };
    for (auto& list : {rows, cols}) {
        for (int x : list)
            if (x < 0 || unsigned(x) >= m.size) fail(Error::Kind::Usage, "minor index out of range");
        if (!std::is_sorted(list.begin(), list.end()))
            fail(Error::Kind::Usage, "minor index lists must be sorted");
    }
    auto kr = keep(rows, m.size), kc = keep(cols, m.size);
    PolyMatrix r(unsigned(kr.size()), m.nvars);
    for (unsigned i = 0; i < kr.size(); ++i)
        for (unsigned j = 0; j < kc.size(); ++j)
            r.at(i, j) = m.at(kr[i], kc[j]);
    return r;
}

MPoly minor_det(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    return det(remove_rows_cols(m, rows, cols));
}

SymLinMatrix graph_matrix(const Graph& g, const LoopTable& table) {
    if (!table.valid_for(g))
        fail(Error::Kind::Usage, "loop table does not match the graph");
    unsigned h = unsigned(table.loop_count());
    unsigned nvars = unsigned(g.edge_count());
    SymLinMatrix m(h, nvars);
    for (unsigned i = 0; i < h; ++i) {
        for (unsigned j = i; j < h; ++j) {
            LinearForm f;
            for (unsigned e = 0; e < nvars; ++e) {
                int c = int(table.rows[i][e]) * int(table.rows[j][e]);
                if (c != 0) f.add_var(e, c);
            }
            m.set(i, j, std::move(f));
        }
    }
    return m;
}

MPoly psi_det(const Graph& g) {
    if (!is_connected(g))
        fail(Error::Kind::Domain, "determinant route requires a connected graph");
    return psi_det(g, cycle_basis(g));
}

MPoly psi_det(const Graph& g, const LoopTable& table) {
    return det(graph_matrix(g, table));
}

MPoly psi_trees(const Graph& g) {
    unsigned nvars = unsigned(g.edge_count());
    PolyBuilder b(nvars);
    std::vector<uint8_t> e(nvars);
    for_each_spanning_forest(g, [&](const std::vector<int>& tree) {
        std::fill(e.begin(), e.end(), 1);
        for (int t : tree) e[t] = 0;
        b.add(e.data(), 1);
    });
    return b.build();
}

RenamedGraphMatrix renamed_graph_matrix(const Graph& g, const LoopTable& table) {
    SymLinMatrix m = graph_matrix(g, table);
    unsigned h = m.size();
    unsigned ne = unsigned(g.edge_count());

    // edge -> number of loops it appears in
    std::vector<int> loop_uses(ne, 0);
    for (auto& row : table.rows)
        for (unsigned e = 0; e < ne; ++e)
            if (row[e] != 0) loop_uses[e]++;

    struct EdgeName { int a_var = -1; i64 sign = 0; };
    std::vector<EdgeName> names(ne);

    // A-variables: superdiagonal entries first, then the other off-diagonal
    // entries by (row, col)
    std::vector<std::pair<unsigned, unsigned>> offdiag;
    for (unsigned i = 0; i + 1 < h; ++i)
        if (!m(i, i + 1).is_zero()) offdiag.push_back({i, i + 1});
    for (unsigned i = 0; i < h; ++i)
        for (unsigned j = i + 2; j < h; ++j)
            if (!m(i, j).is_zero()) offdiag.push_back({i, j});

    std::vector<std::string> var_names;
    for (auto [i, j] : offdiag) {
        const LinearForm& f = m(i, j);
        if (f.constant() != 0 || f.terms().size() != 1 ||
            (f.terms()[0].second != 1 && f.terms()[0].second != -1))
            fail(Error::Kind::Domain,
                 "renaming not applicable: off-diagonal entry is not a signed edge variable");
        auto [e, s] = f.terms()[0];
        if (names[e].a_var >= 0)
            fail(Error::Kind::Domain,
                 "renaming not applicable: edge occurs in several off-diagonal entries");
        names[e] = {int(var_names.size()), s};
        var_names.push_back("A" + std::to_string(var_names.size()));
    }
    unsigned na = unsigned(var_names.size());

    // B-variables: one per diagonal entry owning at least one private edge
    std::vector<int> b_var(h, -1);
    for (unsigned i = 0; i < h; ++i) {
        bool has_private = false;
        for (auto& [e, c] : m(i, i).terms()) {
            (void)c;
            if (loop_uses[e] == 1) has_private = true;
        }
        if (has_private) {
            b_var[i] = int(var_names.size());
            var_names.push_back("B" + std::to_string(i));
        }
    }

    unsigned nvars = unsigned(var_names.size());
    SymLinMatrix out(h, nvars);
    for (unsigned i = 0; i < h; ++i) {
        for (unsigned j = i; j < h; ++j) {
            const LinearForm& f = m(i, j);
            if (f.is_zero()) continue;
            LinearForm r;
            if (i != j) {
                auto [e, s] = f.terms()[0];
                (void)s;
                r.add_var(unsigned(names[e].a_var), 1);
            } else if (b_var[i] >= 0) {
                r.add_var(unsigned(b_var[i]), 1);
            } else {
                // dependent diagonal: every edge here occurs off-diagonal
                for (auto& [e, c] : f.terms()) {
                    if (c != 1 || names[e].a_var < 0)
                        fail(Error::Kind::Domain,
                             "renaming not applicable: dependent diagonal entry");
                    r.add_var(unsigned(names[e].a_var), names[e].sign);
                }
            }
            out.set(i, j, std::move(r));
        }
    }
    (void)na;
    return RenamedGraphMatrix{std::move(out), std::move(var_names)};
}

} // namespace graphyps
