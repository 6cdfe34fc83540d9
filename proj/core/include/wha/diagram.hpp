#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wha/linmap.hpp"

namespace wha {

// Term of the string-diagram language.
//
// Text syntax: layers separated by ';' are read top to bottom (the first
// layer is applied first); juxtaposition inside a layer is tensor. A bare
// name is a generator or the identity of an object (I is the unit).
// c(X.., Y..) is the braiding X(x)Y -> Y(x)X, ci(X.., Y..) is the inverse of
// c(Y.., X..), again X(x)Y -> Y(x)X. ev(X): X*(x)X -> I, coev(X): I -> X(x)X*.
struct MorExpr {
    enum class Kind { Gen, Id, Compose, Tensor, Braid, BraidInv, Eval, Coeval };

    Kind kind = Kind::Id;
    std::string name;                      // Gen, Id (object), Eval/Coeval (object)
    std::vector<std::string> left, right;  // Braid / BraidInv object words
    std::vector<MorExpr> children;         // Compose: g first (g . ... . f); Tensor: left to right

    static MorExpr gen(std::string n);
    static MorExpr id(std::string object);
    static MorExpr compose(std::vector<MorExpr> outer_first);
    static MorExpr tensor(std::vector<MorExpr> parts);
    static MorExpr braid(std::vector<std::string> x, std::vector<std::string> y);
    static MorExpr braid_inv(std::vector<std::string> x, std::vector<std::string> y);
    static MorExpr eval(std::string object);
    static MorExpr coeval(std::string object);

    bool operator==(const MorExpr& o) const = default;
};

// Render in the text syntax; parse(str(e)) reproduces e up to flattening.
std::string str(const MorExpr& e);

class Env {
public:
    explicit Env(Bicharacter chi);

    Field field() const { return chi_.field(); }
    const Bicharacter& chi() const { return chi_; }

    void add_object(const std::string& name, Space s);
    void add_generator(const std::string& name, LinMap m);
    bool has_object(const std::string& name) const;
    bool has_generator(const std::string& name) const { return gens_.count(name) != 0; }
    // "I", registered names, and "X*" for any registered X
    Space object(const std::string& name) const;
    Space word(const std::vector<std::string>& names) const;
    const LinMap& generator(const std::string& name) const;

private:
    Bicharacter chi_;
    std::map<std::string, Space> objects_;
    std::map<std::string, LinMap> gens_;
};

// Names are resolved against env: generators become Gen, objects Id.
MorExpr parse_term(std::string_view text, const Env& env);

std::pair<Space, Space> infer_boundary(const MorExpr& e, const Env& env);
LinMap evaluate(const MorExpr& e, const Env& env);
LinMap evaluate(std::string_view text, const Env& env);

// BoundaryMismatch when the two sides have different boundaries.
std::optional<Difference> compare_terms(const MorExpr& lhs, const MorExpr& rhs, const Env& env);
bool exprs_equal(const MorExpr& lhs, const MorExpr& rhs, const Env& env);

}  // namespace wha
