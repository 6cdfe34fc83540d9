#include "wha/linalg.hpp"

#include <map>

#include "wha/errors.hpp"

namespace wha {

namespace {

// Gauss-Jordan using pivots only in columns [0, limit).
std::vector<std::uint32_t> rref_limited(Dense& m, std::uint32_t limit) {
    std::vector<std::uint32_t> pivots;
    std::uint32_t row = 0;
    for (std::uint32_t c = 0; c < limit && row < m.rows; ++c) {
        std::uint32_t p = row;
        while (p < m.rows && m(p, c).is_zero()) ++p;
        if (p == m.rows) continue;
        if (p != row)
            for (std::uint32_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
        const Scalar inv = m(row, c).inverse();
        for (std::uint32_t j = c; j < m.cols; ++j)
            if (!m(row, j).is_zero()) m(row, j) *= inv;
        for (std::uint32_t i = 0; i < m.rows; ++i) {
            if (i == row || m(i, c).is_zero()) continue;
            const Scalar factor = m(i, c);
            for (std::uint32_t j = c; j < m.cols; ++j)
                if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

Dense Dense::from(const LinMap& m) {
    Dense d(m.field(), m.tgt().dim(), m.src().dim());
    for (std::uint32_t j = 0; j < m.src().dim(); ++j)
        for (const auto& [r, v] : m.column(j)) d(r, j) = v;
    return d;
}

std::vector<std::uint32_t> rref(Dense& m) { return rref_limited(m, m.cols); }

std::uint32_t rank(const LinMap& m) {
    // grade block by grade block
    std::uint32_t total = 0;
    const auto gs = m.src().grades();
    std::map<std::uint32_t, std::vector<std::uint32_t>> by_grade;
    for (std::uint32_t j = 0; j < gs.size(); ++j) by_grade[gs[j]].push_back(j);
    for (const auto& [g, cols] : by_grade) {
        std::map<std::uint32_t, std::uint32_t> rows;
        for (auto j : cols)
            for (const auto& e : m.column(j)) rows.emplace(e.first, 0);
        std::uint32_t k = 0;
        for (auto& [r, i] : rows) i = k++;
        Dense d(m.field(), static_cast<std::uint32_t>(cols.size()), k);  // transposed block
        for (std::uint32_t c = 0; c < cols.size(); ++c)
            for (const auto& [r, v] : m.column(cols[c])) d(c, rows[r]) = v;
        total += static_cast<std::uint32_t>(rref(d).size());
    }
    return total;
}

std::vector<std::vector<Scalar>> kernel_basis(const Dense& m0) {
    Dense m = m0;
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::uint32_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols, Scalar::zero(m.field));
        v[free] = Scalar::one(m.field);
        for (std::uint32_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

AffineSolution solve_affine(const Dense& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows) throw DomainMismatch("right-hand side has wrong length");
    const Field f = m.field;
    Dense aug(f, m.rows, m.cols + 1 + m.rows);
    for (std::uint32_t i = 0; i < m.rows; ++i) {
        for (std::uint32_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
        aug(i, m.cols) = b[i];
        aug(i, m.cols + 1 + i) = Scalar::one(f);
    }
    const auto pivots = rref_limited(aug, m.cols);
    AffineSolution out;
    for (std::uint32_t i = static_cast<std::uint32_t>(pivots.size()); i < m.rows; ++i) {
        if (!aug(i, m.cols).is_zero()) {
            out.certificate.assign(m.rows, Scalar::zero(f));
            for (std::uint32_t k = 0; k < m.rows; ++k) out.certificate[k] = aug(i, m.cols + 1 + k);
            return out;
        }
    }
    std::vector<Scalar> x(m.cols, Scalar::zero(f));
    for (std::uint32_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols);
    out.particular = std::move(x);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::uint32_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols, Scalar::zero(f));
        v[free] = Scalar::one(f);
        for (std::uint32_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug(i, free);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::optional<LinMap> inverse(const LinMap& m) {
    const std::uint32_t n = m.src().dim();
    if (m.tgt().dim() != n) return std::nullopt;
    const Field f = m.field();
    Dense aug(f, n, 2 * n);
    for (std::uint32_t j = 0; j < n; ++j)
        for (const auto& [r, v] : m.column(j)) aug(r, j) = v;
    for (std::uint32_t i = 0; i < n; ++i) aug(i, n + i) = Scalar::one(f);
    if (rref_limited(aug, n).size() != n) return std::nullopt;
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> e;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (!aug(i, n + j).is_zero()) e.emplace_back(i, j, aug(i, n + j));
    return LinMap::from_triples(f, m.tgt(), m.src(), e);
}

Splitting split_idempotent(const LinMap& e) {
    if (e.src() != e.tgt()) throw NotIdempotent("idempotent must be an endomorphism");
    if (compose(e, e) != e) throw NotIdempotent("map is not idempotent");
    const Field f = e.field();
    const Space& x = e.src();
    // pivot columns of e span its image; they are homogeneous since e is
    Dense d = Dense::from(e);
    Dense r = d;
    const auto pivots = rref(r);
    std::vector<std::string> labels;
    std::vector<std::uint32_t> grades;
    const auto gx = x.grades();
    for (auto p : pivots) {
        labels.push_back("im(" + x.label(p) + ")");
        grades.push_back(gx[p]);
    }
    Space img = Space::atomic(labels, grades, x.group());
    std::vector<SparseCol> sec(pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k) sec[k] = e.column(pivots[k]);
    // e = section . retract, and the rows of rref(e) are exactly retract
    std::vector<SparseCol> ret(x.dim());
    for (std::uint32_t j = 0; j < x.dim(); ++j)
        for (std::uint32_t i = 0; i < pivots.size(); ++i)
            if (!r(i, j).is_zero()) ret[j].emplace_back(i, r(i, j));
    LinMap section = LinMap::from_columns(f, img, x, std::move(sec));
    LinMap retract = LinMap::from_columns(f, x, img, std::move(ret));
    return Splitting{img, std::move(retract), std::move(section)};
}

Equalizer equalizer(const LinMap& f, const LinMap& g) {
    if (f.src() != g.src() || f.tgt() != g.tgt()) throw DomainMismatch("equalizer of non-parallel maps");
    const LinMap h = f - g;
    const Field fld = f.field();
    const Space& x = f.src();
    const auto gx = x.grades();
    std::map<std::uint32_t, std::vector<std::uint32_t>> by_grade;
    for (std::uint32_t j = 0; j < gx.size(); ++j) by_grade[gx[j]].push_back(j);
    std::vector<SparseCol> cols;
    std::vector<std::string> labels;
    std::vector<std::uint32_t> grades;
    for (const auto& [gr, idx] : by_grade) {
        std::map<std::uint32_t, std::uint32_t> rows;
        for (auto j : idx)
            for (const auto& e : h.column(j)) rows.emplace(e.first, 0);
        std::uint32_t k = 0;
        for (auto& [r, i] : rows) i = k++;
        Dense d(fld, k, static_cast<std::uint32_t>(idx.size()));
        for (std::uint32_t c = 0; c < idx.size(); ++c)
            for (const auto& [r, v] : h.column(idx[c])) d(rows[r], c) = v;
        for (auto& v : kernel_basis(d)) {
            SparseCol col;
            for (std::uint32_t c = 0; c < idx.size(); ++c)
                if (!v[c].is_zero()) col.emplace_back(idx[c], v[c]);
            canonicalize(col);
            labels.push_back("k" + std::to_string(cols.size()));
            grades.push_back(gr);
            cols.push_back(std::move(col));
        }
    }
    Space e = Space::atomic(labels, grades, x.group());
    return Equalizer{e, LinMap::from_columns(fld, e, x, std::move(cols))};
}

namespace {

std::uint32_t rank_of_columns(Field f, const std::vector<const SparseCol*>& cols) {
    std::map<std::uint32_t, std::uint32_t> rows;
    for (auto c : cols)
        for (const auto& e : *c) rows.emplace(e.first, 0);
    std::uint32_t k = 0;
    for (auto& [r, i] : rows) i = k++;
    Dense d(f, static_cast<std::uint32_t>(cols.size()), k);
    for (std::uint32_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : *cols[c]) d(c, rows[r]) = v;
    return static_cast<std::uint32_t>(rref(d).size());
}

}  // namespace

bool column_span_contains(const LinMap& b, const LinMap& a) {
    if (a.tgt() != b.tgt()) throw DomainMismatch("span test across different spaces");
    std::vector<const SparseCol*> cb, cab;
    for (const auto& c : b.columns()) cb.push_back(&c);
    cab = cb;
    for (const auto& c : a.columns()) cab.push_back(&c);
    return rank_of_columns(a.field(), cab) == rank_of_columns(a.field(), cb);
}

}  // namespace wha
