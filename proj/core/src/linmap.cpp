#include "wha/linmap.hpp"

#include <algorithm>

#include "wha/errors.hpp"

namespace wha {

void canonicalize(SparseCol& col) {
    if (col.empty()) return;
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < col.size();) {
        std::size_t j = i + 1;
        Scalar v = std::move(col[i].second);
        while (j < col.size() && col[j].first == col[i].first) v += col[j++].second;
        if (!v.is_zero()) col[out++] = Entry(col[i].first, std::move(v));
        i = j;
    }
    col.resize(out);
}

LinMap::LinMap(Field f, Space src, Space tgt)
    : field_(f), src_(std::move(src)), tgt_(std::move(tgt)), cols_(src_.dim()) {}

LinMap LinMap::identity(Field f, const Space& x) {
    LinMap m(f, x, x);
    const Scalar one = Scalar::one(f);
    for (std::uint32_t j = 0; j < x.dim(); ++j) m.cols_[j].emplace_back(j, one);
    return m;
}

LinMap LinMap::from_triples(Field f, Space src, Space tgt,
                            const std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>>& entries) {
    LinMap m(f, std::move(src), std::move(tgt));
    for (const auto& [r, c, v] : entries) {
        if (r >= m.tgt_.dim() || c >= m.src_.dim()) throw DomainMismatch("matrix entry out of range");
        if (v.field() != f) throw FieldMismatch("matrix entry from field " + v.field().name());
        m.cols_[c].emplace_back(r, v);
    }
    for (auto& col : m.cols_) canonicalize(col);
    m.check_grades();
    return m;
}

LinMap LinMap::from_columns(Field f, Space src, Space tgt, std::vector<SparseCol> cols) {
    LinMap m(f, std::move(src), std::move(tgt));
    if (cols.size() != m.src_.dim()) throw DomainMismatch("column count differs from source dimension");
    m.cols_ = std::move(cols);
    return m;
}

Scalar LinMap::at(std::uint32_t row, std::uint32_t col) const {
    const auto& c = cols_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::uint32_t r) { return e.first < r; });
    if (it != c.end() && it->first == row) return it->second;
    return Scalar::zero(field_);
}

std::size_t LinMap::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

void LinMap::check_grades() const {
    if (src_.group()->trivial() && tgt_.group()->trivial()) return;
    const auto gs = src_.grades();
    const auto gt = tgt_.grades();
    for (std::uint32_t j = 0; j < cols_.size(); ++j)
        for (const auto& [r, v] : cols_[j])
            if (gt[r] != gs[j])
                throw NotGradePreserving("entry (" + tgt_.label(r) + ", " + src_.label(j) + ") joins different grades");
}

LinMap LinMap::operator+(const LinMap& o) const {
    if (src_ != o.src_ || tgt_ != o.tgt_) throw DomainMismatch("adding maps with different boundaries");
    if (field_ != o.field_) throw FieldMismatch("adding maps over different fields");
    LinMap m(field_, src_, tgt_);
    for (std::size_t j = 0; j < cols_.size(); ++j) {
        auto& c = m.cols_[j];
        c = cols_[j];
        c.insert(c.end(), o.cols_[j].begin(), o.cols_[j].end());
        canonicalize(c);
    }
    return m;
}

LinMap LinMap::scaled(const Scalar& s) const {
    LinMap m(field_, src_, tgt_);
    if (s.is_zero()) return m;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
        m.cols_[j].reserve(cols_[j].size());
        for (const auto& [r, v] : cols_[j]) m.cols_[j].emplace_back(r, v * s);
    }
    return m;
}

LinMap LinMap::operator-(const LinMap& o) const { return *this + o.scaled(-Scalar::one(field_)); }

std::optional<Difference> LinMap::first_difference(const LinMap& o) const {
    if (src_ != o.src_ || tgt_ != o.tgt_) throw DomainMismatch("comparing maps with different boundaries");
    const Scalar zero = Scalar::zero(field_);
    for (std::uint32_t j = 0; j < cols_.size(); ++j) {
        const auto& a = cols_[j];
        const auto& b = o.cols_[j];
        std::size_t i = 0, k = 0;
        while (i < a.size() || k < b.size()) {
            if (k == b.size() || (i < a.size() && a[i].first < b[k].first))
                return Difference{a[i].first, j, a[i].second, zero};
            if (i == a.size() || b[k].first < a[i].first) return Difference{b[k].first, j, zero, b[k].second};
            if (a[i].second != b[k].second) return Difference{a[i].first, j, a[i].second, b[k].second};
            ++i;
            ++k;
        }
    }
    return std::nullopt;
}

bool LinMap::operator==(const LinMap& o) const {
    return field_ == o.field_ && src_ == o.src_ && tgt_ == o.tgt_ && cols_ == o.cols_;
}

LinMap apply_layer(const std::vector<Block>& blocks, const LinMap& input) {
    std::vector<Space> srcs, tgts;
    for (const auto& b : blocks) {
        srcs.push_back(b.src());
        tgts.push_back(b.tgt());
        if (b.map && b.map->field() != input.field()) throw FieldMismatch("layer over a different field");
    }
    const Space lsrc = tensor(srcs);
    if (lsrc != input.tgt())
        throw DomainMismatch("layer source " + lsrc.describe() + " differs from " + input.tgt().describe());
    const Space ltgt = tensor(tgts);
    const std::size_t k = blocks.size();
    std::vector<std::uint32_t> din(k), dout(k);
    for (std::size_t i = 0; i < k; ++i) {
        din[i] = srcs[i].dim();
        dout[i] = tgts[i].dim();
    }
    const Field f = input.field();
    const Scalar one = Scalar::one(f);

    std::vector<SparseCol> out(input.src().dim());
    std::vector<std::uint32_t> idx(k);
    std::vector<SparseCol> parts(k);
    std::vector<std::size_t> pos(k);
    for (std::uint32_t j = 0; j < out.size(); ++j) {
        SparseCol acc;
        for (const auto& [r0, v0] : input.column(j)) {
            std::uint32_t r = r0;
            for (std::size_t i = k; i-- > 0;) {
                idx[i] = r % din[i];
                r /= din[i];
            }
            bool empty = false;
            for (std::size_t i = 0; i < k; ++i) {
                if (blocks[i].map) {
                    parts[i] = blocks[i].map->column(idx[i]);
                } else {
                    parts[i].assign(1, Entry(idx[i], one));
                }
                if (parts[i].empty()) empty = true;
            }
            if (empty) continue;
            // odometer over the Cartesian product of the block columns
            std::fill(pos.begin(), pos.end(), 0);
            while (true) {
                std::uint64_t row = 0;
                Scalar v = v0;
                for (std::size_t i = 0; i < k; ++i) {
                    row = row * dout[i] + parts[i][pos[i]].first;
                    if (!parts[i][pos[i]].second.is_one()) v *= parts[i][pos[i]].second;
                }
                acc.emplace_back(static_cast<std::uint32_t>(row), std::move(v));
                std::size_t i = k;
                while (i > 0) {
                    --i;
                    if (++pos[i] < parts[i].size()) break;
                    pos[i] = 0;
                    if (i == 0) { i = k + 1; break; }
                }
                if (i == k + 1 || k == 0) break;
            }
        }
        canonicalize(acc);
        out[j] = std::move(acc);
    }
    return LinMap::from_columns(f, input.src(), ltgt, std::move(out));
}

LinMap compose(const LinMap& g, const LinMap& f) {
    if (g.src() != f.tgt())
        throw DomainMismatch("cannot compose: " + g.src().describe() + " vs " + f.tgt().describe());
    return apply_layer({Block{&g, {}}}, f);
}

LinMap tensor(const LinMap& f, const LinMap& g) {
    if (f.field() != g.field()) throw FieldMismatch("tensoring maps over different fields");
    return apply_layer({Block{&f, {}}, Block{&g, {}}}, LinMap::identity(f.field(), f.src() * g.src()));
}

LinMap tensor(const std::vector<LinMap>& fs) {
    if (fs.empty()) throw Error("empty tensor of maps needs a field");
    std::vector<Block> blocks;
    std::vector<Space> srcs;
    for (const auto& f : fs) {
        blocks.push_back(Block{&f, {}});
        srcs.push_back(f.src());
    }
    return apply_layer(blocks, LinMap::identity(fs.front().field(), tensor(srcs)));
}

namespace {

void check_in_group(const Space& x, const Bicharacter& chi) {
    if (!x.group()->trivial() && !(*x.group() == *chi.group()))
        throw GradeOutsideGroup("space graded outside the bicharacter's group");
}

}  // namespace

LinMap braiding(const Space& x, const Space& y, const Bicharacter& chi) {
    check_in_group(x, chi);
    check_in_group(y, chi);
    const Field f = chi.field();
    const auto gx = x.grades(), gy = y.grades();
    const std::uint32_t dx = x.dim(), dy = y.dim();
    std::vector<SparseCol> cols(static_cast<std::size_t>(dx) * dy);
    for (std::uint32_t i = 0; i < dx; ++i)
        for (std::uint32_t j = 0; j < dy; ++j) cols[i * dy + j].emplace_back(j * dx + i, chi(gx[i], gy[j]));
    return LinMap::from_columns(f, x * y, y * x, std::move(cols));
}

LinMap braiding_inv(const Space& x, const Space& y, const Bicharacter& chi) {
    check_in_group(x, chi);
    check_in_group(y, chi);
    const Field f = chi.field();
    const auto gx = x.grades(), gy = y.grades();
    const std::uint32_t dx = x.dim(), dy = y.dim();
    std::vector<SparseCol> cols(static_cast<std::size_t>(dx) * dy);
    for (std::uint32_t j = 0; j < dy; ++j)
        for (std::uint32_t i = 0; i < dx; ++i) cols[j * dx + i].emplace_back(i * dy + j, chi(gx[i], gy[j]).inverse());
    return LinMap::from_columns(f, y * x, x * y, std::move(cols));
}

DualData dual_space(Field f, const Space& x) {
    const std::uint32_t d = x.dim();
    std::vector<std::string> labels(d);
    std::vector<std::uint32_t> grades(d);
    const auto gx = x.grades();
    for (std::uint32_t i = 0; i < d; ++i) {
        labels[i] = x.label(i) + "*";
        grades[i] = x.group()->neg(gx[i]);
    }
    Space xs = Space::atomic(std::move(labels), std::move(grades), x.group());
    const Scalar one = Scalar::one(f);
    std::vector<SparseCol> ev(static_cast<std::size_t>(d) * d);
    for (std::uint32_t i = 0; i < d; ++i) ev[i * d + i].emplace_back(0, one);
    std::vector<SparseCol> coev(1);
    for (std::uint32_t i = 0; i < d; ++i) coev[0].emplace_back(i * d + i, one);
    LinMap e = LinMap::from_columns(f, xs * x, Space::unit(), std::move(ev));
    LinMap n = LinMap::from_columns(f, Space::unit(), x * xs, std::move(coev));
    return DualData{xs, std::move(e), std::move(n)};
}

}  // namespace wha
