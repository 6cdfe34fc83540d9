#include "wha/space.hpp"

#include <numeric>
#include <sstream>
#include <unordered_set>

#include "wha/errors.hpp"

namespace wha {

GradingGroup::GradingGroup(std::vector<std::uint32_t> moduli) : moduli_(std::move(moduli)) {
    std::uint64_t order = 1;
    for (auto n : moduli_) {
        if (n == 0) throw Error("cyclic factor of order 0");
        order *= n;
        if (order > 4096) throw Error("grading group too large (order > 4096)");
    }
    order_ = static_cast<std::uint32_t>(order);
    add_.resize(static_cast<std::size_t>(order_) * order_);
    neg_.resize(order_);
    for (std::uint32_t a = 0; a < order_; ++a) {
        auto ra = decode(a);
        std::vector<std::uint32_t> rn(ra.size());
        for (std::size_t i = 0; i < ra.size(); ++i) rn[i] = (moduli_[i] - ra[i]) % moduli_[i];
        neg_[a] = encode(rn);
        for (std::uint32_t b = 0; b < order_; ++b) {
            auto rb = decode(b);
            for (std::size_t i = 0; i < ra.size(); ++i) rb[i] = (ra[i] + rb[i]) % moduli_[i];
            add_[a * order_ + b] = encode(rb);
        }
    }
}

std::uint32_t GradingGroup::encode(const std::vector<std::uint32_t>& residues) const {
    if (residues.size() != moduli_.size()) throw GradeOutsideGroup("grade has wrong number of components");
    std::uint32_t g = 0;
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (residues[i] >= moduli_[i]) throw GradeOutsideGroup("grade component out of range");
        g = g * moduli_[i] + residues[i];
    }
    return g;
}

std::vector<std::uint32_t> GradingGroup::decode(std::uint32_t g) const {
    std::vector<std::uint32_t> r(moduli_.size());
    for (std::size_t i = moduli_.size(); i-- > 0;) {
        r[i] = g % moduli_[i];
        g /= moduli_[i];
    }
    return r;
}

std::string GradingGroup::str(std::uint32_t g) const {
    auto r = decode(g);
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
}

GroupPtr trivial_group() {
    static const GroupPtr g = std::make_shared<const GradingGroup>();
    return g;
}

Bicharacter::Bicharacter(Field f) : field_(f), group_(trivial_group()), table_{Scalar::one(f)} {}

Bicharacter::Bicharacter(Field f, GroupPtr group, std::vector<Scalar> table)
    : field_(f), group_(std::move(group)), table_(std::move(table)) {
    const std::size_t n = group_->order();
    if (table_.size() != n * n) throw Error("bicharacter table has wrong size");
    for (auto& v : table_) {
        if (v.field() != f) throw FieldMismatch("bicharacter value from another field");
        if (v.is_zero()) throw Error("bicharacter takes the value 0");
    }
    if (!multiplicative()) throw Error("bicharacter table is not multiplicative");
}

Bicharacter Bicharacter::from_generators(Field f, GroupPtr group, const std::vector<std::vector<Scalar>>& gens) {
    const auto& mod = group->moduli();
    const std::size_t k = mod.size();
    if (gens.size() != k) throw Error("bicharacter generator matrix has wrong size");
    for (auto& row : gens)
        if (row.size() != k) throw Error("bicharacter generator matrix has wrong size");
    const std::uint32_t n = group->order();
    std::vector<Scalar> table(static_cast<std::size_t>(n) * n, Scalar::one(f));
    for (std::uint32_t a = 0; a < n; ++a) {
        auto ra = group->decode(a);
        for (std::uint32_t b = 0; b < n; ++b) {
            auto rb = group->decode(b);
            Scalar v = Scalar::one(f);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    for (std::uint32_t e = 0; e < ra[i] * rb[j]; ++e) v *= gens[i][j];
            table[a * n + b] = v;
        }
    }
    return Bicharacter(f, std::move(group), std::move(table));
}

bool Bicharacter::multiplicative() const {
    const std::uint32_t n = group_->order();
    const auto& G = *group_;
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c) {
                if ((*this)(G.add(a, b), c) != (*this)(a, c) * (*this)(b, c)) return false;
                if ((*this)(a, G.add(b, c)) != (*this)(a, b) * (*this)(a, c)) return false;
            }
    return true;
}

bool Bicharacter::symmetric_braiding() const {
    const std::uint32_t n = group_->order();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            if (!((*this)(a, b) * (*this)(b, a)).is_one()) return false;
    return true;
}

bool Basis::operator==(const Basis& o) const {
    if (this == &o) return true;
    return labels == o.labels && grades == o.grades && *group == *o.group;
}

Space Space::atomic(std::vector<std::string> labels, std::vector<std::uint32_t> grades, GroupPtr group) {
    if (!group) group = trivial_group();
    if (grades.empty()) grades.assign(labels.size(), 0);
    if (grades.size() != labels.size()) throw Error("basis grades and labels differ in length");
    std::unordered_set<std::string> seen;
    for (auto& l : labels)
        if (!seen.insert(l).second) throw Error("duplicate basis label '" + l + "'");
    for (auto g : grades)
        if (g >= group->order()) throw GradeOutsideGroup("basis grade outside the grading group");
    Space s;
    auto b = std::make_shared<Basis>();
    b->labels = std::move(labels);
    b->grades = std::move(grades);
    b->group = group;
    s.dim_ = static_cast<std::uint32_t>(b->labels.size());
    s.group_ = std::move(group);
    s.factors_.push_back(std::move(b));
    return s;
}

std::uint32_t Space::grade(std::uint32_t i) const {
    std::uint32_t g = 0;
    for (std::size_t k = factors_.size(); k-- > 0;) {
        const auto& f = *factors_[k];
        const auto d = static_cast<std::uint32_t>(f.labels.size());
        g = group_->add(g, f.grades[i % d]);
        i /= d;
    }
    return g;
}

std::vector<std::uint32_t> Space::grades() const {
    std::vector<std::uint32_t> out{0};
    for (const auto& f : factors_) {
        std::vector<std::uint32_t> next;
        next.reserve(out.size() * f->grades.size());
        for (auto a : out)
            for (auto b : f->grades) next.push_back(group_->add(a, b));
        out = std::move(next);
    }
    return out;
}

std::string Space::label(std::uint32_t i) const {
    if (factors_.empty()) return "1";
    std::vector<const std::string*> parts(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
        const auto d = static_cast<std::uint32_t>(factors_[k]->labels.size());
        parts[k] = &factors_[k]->labels[i % d];
        i /= d;
    }
    std::string s;
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "|" : "") + *parts[k];
    return s;
}

Space operator*(const Space& a, const Space& b) {
    if (!a.group_->trivial() && !b.group_->trivial() && !(*a.group_ == *b.group_))
        throw GradeOutsideGroup("tensoring spaces graded by different groups");
    Space s;
    s.factors_ = a.factors_;
    s.factors_.insert(s.factors_.end(), b.factors_.begin(), b.factors_.end());
    const std::uint64_t d = static_cast<std::uint64_t>(a.dim_) * b.dim_;
    if (d > 50'000'000) throw Error("tensor space too large");
    s.dim_ = static_cast<std::uint32_t>(d);
    s.group_ = a.group_->trivial() ? b.group_ : a.group_;
    return s;
}

bool Space::operator==(const Space& o) const {
    if (dim_ != o.dim_ || factors_.size() != o.factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!(*factors_[i] == *o.factors_[i])) return false;
    return true;
}

std::string Space::describe() const {
    if (factors_.empty()) return "I";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? "(x)" : "") << "[" << factors_[i]->labels.size() << "]";
    return os.str();
}

Space tensor(const std::vector<Space>& spaces) {
    Space s;
    for (const auto& x : spaces) s = s * x;
    return s;
}

}  // namespace wha
