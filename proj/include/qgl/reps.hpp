#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgl/partition.hpp"
#include "qgl/scalar.hpp"
#include "qgl/series.hpp"

namespace qgl {

/// Basis label: {i} for V(u), a in Z^N for tensors, parts for shapes.
using Label = std::vector<int>;

enum class GenKind { e, f, psi_plus, psi_minus };

struct GeneratorMode {
    GenKind kind;
    int mode;
    /// Throws InvalidInput for psi+ with m < 0 or psi- with m > 0.
    void validate() const;
    std::string to_string() const;
};

/// coeff * delta(support / z) |target>; mode m contributes coeff * support^m.
struct DeltaTerm {
    Monomial support;
    FactoredScalar coeff;
    Label target;
};

using StateVector = std::map<Label, Scalar>;

/// A module of the algebra with delta-function actions on a labelled basis.
class Module {
public:
    virtual ~Module() = default;

    virtual std::string family() const = 0;
    /// Nonzero terms of e(z)|label>.
    virtual std::vector<DeltaTerm> e_terms(const Label& label) const = 0;
    virtual std::vector<DeltaTerm> f_terms(const Label& label) const = 0;
    /// Rational eigenfunction in z; psi+ is its expansion at z = infinity,
    /// psi- its expansion at z = 0.
    virtual FactoredScalar psi_function(const Label& label) const = 0;
    /// Documented action of (psi+_0, psi-_0).
    virtual std::pair<Scalar, Scalar> level() const = 0;
    virtual bool contains(const Label& label) const = 0;
    /// Brings a coefficient written in q1, q3 into the module's base field.
    virtual Scalar specialize(const Scalar& s) const { return s; }
    virtual nlohmann::json label_json(const Label& label) const;
};

using ModulePtr = std::shared_ptr<const Module>;

/// gamma_{i,u}(z) with q2 eliminated.
FactoredScalar gamma_fn(int i, const Monomial& u);
/// (1 - q2 q3^N u/z) / (1 - q3^N u/z)
FactoredScalar beta_n(int n, const Monomial& u);
/// Stabilizer for the truncated resonance modules:
/// prod_{i=N+1}^{N+k} (1 - q1^{l0_i} q3^i u/z) / (1 - q1^{l0_i} q3^{i-1} u/z).
FactoredScalar beta_kn(const TailSpec& tail, int n, const Monomial& u);
/// The displayed stabilizer with N = nu k + i + 1.
FactoredScalar beta_kn_displayed(const TailSpec& tail, int n, const Monomial& u);

ModulePtr make_vector_module(const Monomial& u = Monomial(Var::u));
/// Tensor product of V(u_s); defaults to free symbols u1..uN.
ModulePtr make_tensor_module(int n);
ModulePtr make_tensor_module(std::vector<Monomial> us);
/// W^N(u); `modified` switches on the beta_N-modified f and psi (W^{N,+}).
ModulePtr make_wn_module(int n, const Monomial& u = Monomial(Var::u), bool modified = false);
ModulePtr make_fock_module(const Monomial& u = Monomial(Var::u));
/// W^{k,r}_c(u) over Q(p, u).
ModulePtr make_resonance_module(const TailSpec& tail, const Monomial& u = Monomial(Var::u));
/// W^{k,r,N,+}_c(u) with beta_{k,N}-modified operators, over Q(p, u).
ModulePtr make_resonance_finite_module(const TailSpec& tail, int n, const Monomial& u = Monomial(Var::u));

/// g_m |label> for one generator mode; psi modes need series order >= |m|.
StateVector apply(const Module& mod, const GeneratorMode& g, const Label& label);

StateVector vector_apply(const GeneratorMode& g, int i, const Monomial& u = Monomial(Var::u));
StateVector tensor_apply(const GeneratorMode& g, const Label& a, const std::vector<Monomial>& us);
StateVector wn_apply(const GeneratorMode& g, const Partition& lambda, const Monomial& u = Monomial(Var::u));
StateVector wn_modified_apply(const GeneratorMode& g, const Partition& lambda, const Monomial& u = Monomial(Var::u));
StateVector fock_apply(const GeneratorMode& g, const Partition& lambda, const Monomial& u = Monomial(Var::u));
StateVector resonance_apply(const GeneratorMode& g, const Partition& lambda, const Monomial& u = Monomial(Var::u));

/// Compares the product forms of the Fock matrix coefficients with the
/// component-ratio forms built from gamma functions.
bool fock_factorized_check(const Partition& lambda, const Monomial& u = Monomial(Var::u));

/// Induction step of the semi-infinite construction: for lambda with N
/// entries and lambda_N = 0, the beta_N-modified action on W^{N,+} stays in
/// W^{N,+}, commutes with padding by a zero, and agrees with the Fock action.
/// Returns a description of the first mismatch, empty when stable.
std::string wn_truncation_stability(const std::vector<int>& lambda, const Monomial& u = Monomial(Var::u));
/// Same for the truncated resonance modules: lambda has N entries whose last
/// k agree with the tail; compares N against N + k and against the limit.
std::string resonance_truncation_stability(const TailSpec& tail, const std::vector<int>& lambda, const Monomial& u = Monomial(Var::u));

bool state_equal(const StateVector& a, const StateVector& b);
nlohmann::json state_to_json(const Module& mod, const StateVector& v);

}  // namespace qgl
