#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qgl/field.hpp"
#include "qgl/reps.hpp"

namespace qgl {

/// Applies generator modes of a module to finite combinations of basis
/// vectors with coefficients in a field F (SymbolicField or ModularField).
/// Matrix coefficients and psi series are cached per basis label.
template <class F>
class Engine {
public:
    using Elem = typename F::Elem;
    using Vec = std::map<Label, Elem>;

    Engine(const Module& mod, F field, int series_order)
        : mod_(mod), field_(std::move(field)), order_(series_order) {}

    const F& field() const { return field_; }
    const Module& module() const { return mod_; }
    int series_order() const { return order_; }

    Vec basis(const Label& l) const { return {{l, field_.one()}}; }

    Vec apply(const GeneratorMode& g, const Vec& v) {
        Vec out;
        for (const auto& [label, c] : v) {
            for (const auto& [target, t] : column(g, label)) {
                auto [it, inserted] = out.try_emplace(target, field_.zero());
                field_.add(it->second, field_.mul(c, t));
            }
        }
        return out;
    }

    /// Applies ops right to left: chain({A, B}, v) = A(B(v)).
    Vec chain(const std::vector<GeneratorMode>& ops, Vec v) {
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) v = apply(*it, v);
        return v;
    }

    void axpy(Vec& acc, const Elem& c, const Vec& x) const {
        for (const auto& [l, v] : x) {
            auto [it, inserted] = acc.try_emplace(l, field_.zero());
            field_.add(it->second, field_.mul(c, v));
        }
    }

    /// Label of the first nonzero coefficient, or nothing if v is zero.
    std::optional<Label> first_nonzero(const Vec& v) const {
        for (const auto& [l, c] : v)
            if (!field_.is_zero(c)) return l;
        return std::nullopt;
    }

    /// psi+_m (m >= 0) or psi-_m (m <= 0) eigenvalue on a basis label.
    Elem psi_value(bool plus, int m, const Label& label) {
        if ((plus && m < 0) || (!plus && m > 0)) return field_.zero();
        int idx = plus ? m : -m;
        if (idx > order_) throw QglError("psi mode " + std::to_string(m) + " beyond the series order");
        auto it = psi_.find(label);
        if (it == psi_.end()) {
            FactoredScalar fn = mod_.psi_function(label);
            std::pair<std::vector<Elem>, std::vector<Elem>> s;
            for (const auto& c : series_expand(fn, Var::z, Direction::at_infinity, order_).coeffs)
                s.first.push_back(field_.scalar(c));
            for (const auto& c : series_expand(fn, Var::z, Direction::at_zero, order_).coeffs)
                s.second.push_back(field_.scalar(c));
            it = psi_.emplace(label, std::move(s)).first;
        }
        return plus ? it->second.first[static_cast<std::size_t>(idx)] : it->second.second[static_cast<std::size_t>(idx)];
    }

private:
    using Column = std::vector<std::pair<Label, Elem>>;

    const Column& column(const GeneratorMode& g, const Label& label) {
        auto key = std::make_tuple(static_cast<int>(g.kind), g.mode, label);
        auto it = columns_.find(key);
        if (it != columns_.end()) return it->second;
        Column col;
        if (g.kind == GenKind::e || g.kind == GenKind::f) {
            for (const auto& t : terms(g.kind, label)) col.emplace_back(t.target, field_.term(t.coeff, t.support.pow(g.mode)));
        } else {
            col.emplace_back(label, psi_value(g.kind == GenKind::psi_plus, g.mode, label));
        }
        return columns_.emplace(key, std::move(col)).first->second;
    }

    const std::vector<DeltaTerm>& terms(GenKind kind, const Label& label) {
        auto& cache = kind == GenKind::e ? e_terms_ : f_terms_;
        auto it = cache.find(label);
        if (it != cache.end()) return it->second;
        return cache.emplace(label, kind == GenKind::e ? mod_.e_terms(label) : mod_.f_terms(label)).first->second;
    }

    const Module& mod_;
    F field_;
    int order_;
    std::map<Label, std::vector<DeltaTerm>> e_terms_, f_terms_;
    std::map<Label, std::pair<std::vector<Elem>, std::vector<Elem>>> psi_;
    std::map<std::tuple<int, int, Label>, Column> columns_;
};

}  // namespace qgl
