#ifndef NAMBU_MULTIVEC_HPP
#define NAMBU_MULTIVEC_HPP

#include <map>
#include <optional>
#include <vector>

#include "nambu/invfields.hpp"

namespace nambu {

/// Antisymmetric order-n contravariant tensor with ExpPoly components,
/// stored on strictly increasing index tuples. Optional decomposable
/// provenance f * X_1 ^ ... ^ X_n is kept when built by wedge().
class Multivector {
 public:
  Multivector(int order, int dim) : order_(order), dim_(dim) {}

  int order() const { return order_; }
  int dim() const { return dim_; }

  /// Component at a strictly increasing tuple (creates zero when absent).
  const ExpPoly& at(const std::vector<int>& idx) const;
  void set(const std::vector<int>& idx, ExpPoly value);
  /// Signed lookup for arbitrary tuples (0 on repeated indices).
  ExpPoly component(const std::vector<int>& idx) const;

  const std::map<std::vector<int>, ExpPoly>& components() const {
    return comps_;
  }

  bool is_zero() const;

  friend Multivector operator+(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a, const Multivector& b);
  friend bool operator==(const Multivector& a, const Multivector& b);

  /// Decomposable provenance, when known.
  struct Provenance {
    ExpPoly prefactor;
    std::vector<VectorField> factors;
  };
  const std::optional<Provenance>& provenance() const { return prov_; }
  void set_provenance(Provenance p) { prov_ = std::move(p); }

 private:
  int order_, dim_;
  std::map<std::vector<int>, ExpPoly> comps_;  // increasing tuples, nonzero
  std::optional<Provenance> prov_;
};

/// f * X_1 ^ ... ^ X_n with components f * det of selected field components.
Multivector wedge(const ExpPoly& f, const std::vector<VectorField>& fields,
                  int dim = 4);

/// {f_1,...,f_n} = eta(df_1,...,df_n), exact.
ExpPoly nbracket(const Multivector& eta, const std::vector<ExpPoly>& fs);

/// X with X(g) = {f_1,...,f_{n-1},g}; components extracted on coordinates.
VectorField hamiltonian_field(const Multivector& eta,
                              const std::vector<ExpPoly>& fs);

/// (L_X eta)^{mu...} = X(eta^{mu...}) - sum_a (d_nu X^{mu_a}) eta^{mu.. nu ..mu}
Multivector lie_derivative(const VectorField& x, const Multivector& eta);

struct FidCounterexample {
  std::vector<ExpPoly> fs;
  std::vector<int> component;
};

/// Definition-1 spot check: for seeded random polynomial tuples (degree <= 2,
/// small integer coefficients) tests L_{X_{f_1..f_{n-1}}} eta = 0 exactly.
std::optional<FidCounterexample> fundamental_identity_check(
    const Multivector& eta, int trials, unsigned long seed);

}  // namespace nambu

#endif
