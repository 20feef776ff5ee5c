#ifndef LCS_CONFORMAL_MODULE_HPP
#define LCS_CONFORMAL_MODULE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcs/algebra.hpp"
#include "lcs/catalog.hpp"
#include "lcs/hnf.hpp"

namespace lcs {

struct ModuleViolation {
  int a, b, v;         // algebra generator pair, module generator
  int target;          // module generator the residual lands on
  MultiPoly residual;  // in (d, l, m) and parameters
};

// Conformal module over a ConformalSuperAlgebra: action table
// a_l u = sum_w P_{a,u}^w(d, l) w on generators, extended by
// sesquilinearity exactly like the algebra bracket.
class ConformalModule {
 public:
  ConformalModule(ConformalSuperAlgebra alg, std::vector<BasisElement> gens);

  const ConformalSuperAlgebra& algebra() const { return alg_; }
  int rank() const { return static_cast<int>(gens_.size()); }
  const std::vector<BasisElement>& generators() const { return gens_; }
  Parity parity(int u) const { return gens_[static_cast<std::size_t>(u)].parity; }
  int index_of(const std::string& name) const;

  void set_action(int a, int u, int w, MultiPoly p);
  void set_action(const std::string& a, const std::string& u, const std::string& w,
                  const MultiPoly& p);
  const MultiPoly& action(int a, int u, int w) const;
  const std::map<int, MultiPoly>& action_row(int a, int u) const;

  // x_l u for an algebra element x (coords in d) and module coordinate
  // vector u (coords in d): entries in (d, l) and parameters.
  std::vector<MultiPoly> action_eval(const Element& x, const PolyRow& u) const;

  // Residuals of [a_l b]_{l+m} v = a_l (b_m v) - (-1)^{|a||b|} b_m (a_l v),
  // one record per nonzero residual, identically in parameters.
  std::vector<ModuleViolation> check_module(ExecMode mode = ExecMode::Parallel) const;

  bool has_symbolic_params() const;

 private:
  ConformalSuperAlgebra alg_;
  std::vector<BasisElement> gens_;
  // action_[a][u]: target -> P
  std::vector<std::vector<std::map<int, MultiPoly>>> action_;

  std::map<int, MultiPoly> module_residuals(int a, int b, int v) const;
};

struct ModuleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BuiltModule {
  std::string tag;
  SlotMap slots;
  ConformalModule mod;
};

// Family tags: V (rank-one Vir module), NSbar, NSbarP, N (slots f, g),
// M_A, M_B, M_plus, M_minus, M_om (slots delta, eta, om), M_ze (slots
// delta, zeta, c, eps), HVS1..HVS6. The algebra must have the matching
// shape. Missing scalar slots default to fresh symbolic parameters.
BuiltModule build_module(const ConformalSuperAlgebra& alg, const std::string& tag,
                         const SlotMap& slots = {});

// Largest n with a_(n) v != 0 over all generator pairs (the lambda-degree
// bound); locality holds mechanically, the bound documents it.
int locality_bound(const ConformalModule& mod);
bool locality_check(const ConformalModule& mod, int level);

// True iff C[d] p(d) v is action-closed in a rank-one module (p != 0,
// parameters instantiated).
bool rank1_closure_test(const MultiPoly& p, const ConformalModule& mod);

// Smallest action-closed C[d]-submodule containing the generators.
PolySubmodule submodule_closure(const ConformalModule& mod,
                                std::vector<PolyRow> generators);

bool is_proper(const ConformalModule& mod, const PolySubmodule& sub);

struct ReducibilityWitness {
  std::string description;       // e.g. "d + 2" or generator name
  PolyRow generator;
  PolySubmodule submodule;
};

struct ProbeResult {
  bool reducible = false;
  std::vector<ReducibilityWitness> witnesses;  // deduped by submodule
  long candidates_tried = 0;
};

// Bounded reducibility probe: candidates are the single module generators
// plus p(d)*(single generator) for monic p of degree <= degree_bound whose
// roots come from the rational roots of the lambda-free parts of the action
// polynomials. Requires rank <= 2 and instantiated parameters.
ProbeResult irreducibility_probe(const ConformalModule& mod, int degree_bound,
                                 const std::vector<PolyRow>& extra_candidates = {});

}  // namespace lcs

#endif
