#include "wha/diagram.hpp"

#include <cctype>

#include "wha/errors.hpp"

namespace wha {

MorExpr MorExpr::gen(std::string n) {
    MorExpr e;
    e.kind = Kind::Gen;
    e.name = std::move(n);
    return e;
}

MorExpr MorExpr::id(std::string object) {
    MorExpr e;
    e.kind = Kind::Id;
    e.name = std::move(object);
    return e;
}

MorExpr MorExpr::compose(std::vector<MorExpr> outer_first) {
    if (outer_first.empty()) throw SyntaxError("empty composite");
    if (outer_first.size() == 1) return std::move(outer_first.front());
    MorExpr e;
    e.kind = Kind::Compose;
    for (auto& c : outer_first) {
        if (c.kind == Kind::Compose)
            for (auto& cc : c.children) e.children.push_back(std::move(cc));
        else
            e.children.push_back(std::move(c));
    }
    return e;
}

MorExpr MorExpr::tensor(std::vector<MorExpr> parts) {
    if (parts.size() == 1) return std::move(parts.front());
    MorExpr e;
    e.kind = Kind::Tensor;
    for (auto& c : parts) {
        if (c.kind == Kind::Tensor)
            for (auto& cc : c.children) e.children.push_back(std::move(cc));
        else
            e.children.push_back(std::move(c));
    }
    return e;
}

MorExpr MorExpr::braid(std::vector<std::string> x, std::vector<std::string> y) {
    MorExpr e;
    e.kind = Kind::Braid;
    e.left = std::move(x);
    e.right = std::move(y);
    return e;
}

MorExpr MorExpr::braid_inv(std::vector<std::string> x, std::vector<std::string> y) {
    MorExpr e = braid(std::move(x), std::move(y));
    e.kind = Kind::BraidInv;
    return e;
}

MorExpr MorExpr::eval(std::string object) {
    MorExpr e;
    e.kind = Kind::Eval;
    e.name = std::move(object);
    return e;
}

MorExpr MorExpr::coeval(std::string object) {
    MorExpr e = eval(std::move(object));
    e.kind = Kind::Coeval;
    return e;
}

namespace {

std::string join(const std::vector<std::string>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i];
    return s;
}

}  // namespace

std::string str(const MorExpr& e) {
    using K = MorExpr::Kind;
    switch (e.kind) {
        case K::Gen:
        case K::Id: return e.name;
        case K::Braid: return "c(" + join(e.left) + ", " + join(e.right) + ")";
        case K::BraidInv: return "ci(" + join(e.left) + ", " + join(e.right) + ")";
        case K::Eval: return "ev(" + e.name + ")";
        case K::Coeval: return "coev(" + e.name + ")";
        case K::Tensor: {
            std::string s;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                const auto& c = e.children[i];
                const bool wrap = c.kind == K::Compose || c.kind == K::Tensor;
                s += (i ? " " : "") + (wrap ? "(" + str(c) + ")" : str(c));
            }
            return s;
        }
        case K::Compose: {
            std::string s;
            for (std::size_t i = e.children.size(); i-- > 0;) {
                s += str(e.children[i]) + (i ? " ; " : "");
            }
            return s;
        }
    }
    return {};
}

Env::Env(Bicharacter chi) : chi_(std::move(chi)) {}

void Env::add_object(const std::string& name, Space s) {
    if (name == "I" || name.find('*') != std::string::npos) throw Error("reserved object name '" + name + "'");
    if (gens_.count(name)) throw Error("name '" + name + "' already names a generator");
    objects_.insert_or_assign(name, std::move(s));
}

void Env::add_generator(const std::string& name, LinMap m) {
    if (objects_.count(name) || name == "I") throw Error("name '" + name + "' already names an object");
    if (m.field() != field()) throw FieldMismatch("generator '" + name + "' over another field");
    gens_.insert_or_assign(name, std::move(m));
}

bool Env::has_object(const std::string& name) const {
    if (name == "I") return true;
    if (!name.empty() && name.back() == '*') return objects_.count(name.substr(0, name.size() - 1)) != 0;
    return objects_.count(name) != 0;
}

Space Env::object(const std::string& name) const {
    if (name == "I") return Space::unit();
    if (!name.empty() && name.back() == '*') return dual_space(field(), object(name.substr(0, name.size() - 1))).dual;
    auto it = objects_.find(name);
    if (it == objects_.end()) throw UnknownName("unknown object '" + name + "'");
    return it->second;
}

Space Env::word(const std::vector<std::string>& names) const {
    Space s;
    for (const auto& n : names) s = s * object(n);
    return s;
}

const LinMap& Env::generator(const std::string& name) const {
    auto it = gens_.find(name);
    if (it == gens_.end()) throw UnknownName("unknown generator '" + name + "'");
    return it->second;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const Env& env) : s_(text), env_(env) {}

    MorExpr run() {
        MorExpr e = term();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError(what + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++i_;
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

    std::string ident() {
        skip();
        if (i_ >= s_.size() || !ident_start(s_[i_])) fail("expected a name");
        std::size_t b = i_;
        while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
        if (i_ < s_.size() && s_[i_] == '*') ++i_;
        return std::string(s_.substr(b, i_ - b));
    }

    std::vector<std::string> object_word() {
        std::vector<std::string> w;
        while (true) {
            skip();
            if (i_ >= s_.size() || !ident_start(s_[i_])) break;
            w.push_back(ident());
        }
        if (w.empty()) fail("expected object names");
        return w;
    }

    MorExpr term() {
        std::vector<MorExpr> layers;
        layers.push_back(layer());
        while (peek(';')) {
            ++i_;
            layers.push_back(layer());
        }
        // text order is application order; store outermost first
        std::vector<MorExpr> outer_first(layers.rbegin(), layers.rend());
        return MorExpr::compose(std::move(outer_first));
    }

    MorExpr layer() {
        std::vector<MorExpr> parts;
        while (true) {
            skip();
            if (i_ >= s_.size() || s_[i_] == ';' || s_[i_] == ')') break;
            parts.push_back(factor());
        }
        if (parts.empty()) fail("empty layer");
        return MorExpr::tensor(std::move(parts));
    }

    MorExpr factor() {
        if (peek('(')) {
            ++i_;
            MorExpr e = term();
            expect(')');
            return e;
        }
        const std::string n = ident();
        if (peek('(') && (n == "c" || n == "ci" || n == "ev" || n == "coev")) {
            ++i_;
            if (n == "ev" || n == "coev") {
                auto w = object_word();
                expect(')');
                if (w.size() != 1) fail(n + " takes a single object");
                for (auto& o : w)
                    if (!env_.has_object(o)) throw UnknownName("unknown object '" + o + "'");
                return n == "ev" ? MorExpr::eval(w[0]) : MorExpr::coeval(w[0]);
            }
            auto x = object_word();
            expect(',');
            auto y = object_word();
            expect(')');
            for (auto* w : {&x, &y})
                for (auto& o : *w)
                    if (!env_.has_object(o)) throw UnknownName("unknown object '" + o + "'");
            return n == "c" ? MorExpr::braid(std::move(x), std::move(y)) : MorExpr::braid_inv(std::move(x), std::move(y));
        }
        if (env_.has_generator(n)) return MorExpr::gen(n);
        if (env_.has_object(n)) return MorExpr::id(n);
        throw UnknownName("unknown name '" + n + "'");
    }

    std::string_view s_;
    const Env& env_;
    std::size_t i_ = 0;
};

std::pair<Space, Space> boundary_at(const MorExpr& e, const Env& env, const std::string& path) {
    using K = MorExpr::Kind;
    switch (e.kind) {
        case K::Gen: {
            const auto& m = env.generator(e.name);
            return {m.src(), m.tgt()};
        }
        case K::Id: {
            auto x = env.object(e.name);
            return {x, x};
        }
        case K::Braid:
        case K::BraidInv: {
            auto x = env.word(e.left), y = env.word(e.right);
            return {x * y, y * x};
        }
        case K::Eval: {
            auto x = env.object(e.name);
            return {env.object(e.name + "*") * x, Space::unit()};
        }
        case K::Coeval: {
            auto x = env.object(e.name);
            return {Space::unit(), x * env.object(e.name + "*")};
        }
        case K::Tensor: {
            Space s, t;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                auto [a, b] = boundary_at(e.children[i], env, path + "/tensor[" + std::to_string(i) + "]");
                s = s * a;
                t = t * b;
            }
            return {s, t};
        }
        case K::Compose: {
            const std::size_t n = e.children.size();
            auto [src, cur] = boundary_at(e.children[n - 1], env, path + "/layer[0]");
            for (std::size_t k = 1; k < n; ++k) {
                const std::string here = path + "/layer[" + std::to_string(k) + "]";
                auto [a, b] = boundary_at(e.children[n - 1 - k], env, here);
                if (a != cur)
                    throw BoundaryMismatch("at " + here + " (" + str(e.children[n - 1 - k]) + "): expects " +
                                           a.describe() + " but receives " + cur.describe());
                cur = b;
            }
            return {src, cur};
        }
    }
    throw Error("bad term");
}

LinMap eval_rec(const MorExpr& e, const Env& env);

// Turns one layer into blocks; maps are kept alive in storage.
std::vector<Block> layer_blocks(const MorExpr& layer, const Env& env, std::vector<LinMap>& storage) {
    std::vector<const MorExpr*> parts;
    if (layer.kind == MorExpr::Kind::Tensor)
        for (const auto& c : layer.children) parts.push_back(&c);
    else
        parts.push_back(&layer);
    storage.reserve(parts.size());
    std::vector<Block> blocks;
    std::vector<std::size_t> which;
    for (const auto* p : parts) {
        if (p->kind == MorExpr::Kind::Id) {
            blocks.push_back(Block{nullptr, env.object(p->name)});
        } else {
            storage.push_back(eval_rec(*p, env));
            blocks.push_back(Block{nullptr, Space()});
            which.push_back(blocks.size() - 1);
        }
    }
    for (std::size_t k = 0; k < which.size(); ++k) blocks[which[k]].map = &storage[k];
    return blocks;
}

LinMap eval_rec(const MorExpr& e, const Env& env) {
    using K = MorExpr::Kind;
    const Field f = env.field();
    switch (e.kind) {
        case K::Gen: return env.generator(e.name);
        case K::Id: return LinMap::identity(f, env.object(e.name));
        case K::Braid: return braiding(env.word(e.left), env.word(e.right), env.chi());
        case K::BraidInv: return braiding_inv(env.word(e.right), env.word(e.left), env.chi());
        case K::Eval: return dual_space(f, env.object(e.name)).ev;
        case K::Coeval: return dual_space(f, env.object(e.name)).coev;
        case K::Tensor: {
            std::vector<LinMap> storage;
            auto blocks = layer_blocks(e, env, storage);
            std::vector<Space> srcs;
            for (const auto& b : blocks) srcs.push_back(b.src());
            return apply_layer(blocks, LinMap::identity(f, tensor(srcs)));
        }
        case K::Compose: {
            const std::size_t n = e.children.size();
            LinMap cur = eval_rec(e.children[n - 1], env);
            for (std::size_t k = 1; k < n; ++k) {
                std::vector<LinMap> storage;
                auto blocks = layer_blocks(e.children[n - 1 - k], env, storage);
                cur = apply_layer(blocks, cur);
            }
            return cur;
        }
    }
    throw Error("bad term");
}

}  // namespace

MorExpr parse_term(std::string_view text, const Env& env) { return Parser(text, env).run(); }

std::pair<Space, Space> infer_boundary(const MorExpr& e, const Env& env) { return boundary_at(e, env, ""); }

LinMap evaluate(const MorExpr& e, const Env& env) {
    infer_boundary(e, env);
    return eval_rec(e, env);
}

LinMap evaluate(std::string_view text, const Env& env) { return evaluate(parse_term(text, env), env); }

std::optional<Difference> compare_terms(const MorExpr& lhs, const MorExpr& rhs, const Env& env) {
    auto [ls, lt] = infer_boundary(lhs, env);
    auto [rs, rt] = infer_boundary(rhs, env);
    if (ls != rs || lt != rt)
        throw BoundaryMismatch("sides have different boundaries: " + ls.describe() + " -> " + lt.describe() + " vs " +
                               rs.describe() + " -> " + rt.describe());
    return eval_rec(lhs, env).first_difference(eval_rec(rhs, env));
}

bool exprs_equal(const MorExpr& lhs, const MorExpr& rhs, const Env& env) {
    return !compare_terms(lhs, rhs, env).has_value();
}

}  // namespace wha
