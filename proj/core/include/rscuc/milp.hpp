#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace rscuc {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { LE, EQ, GE };

// Registry kinds for SCUC variables: u, v, P_g, r, P_k, theta.
enum class VarKind { CommitU, StartV, GenP, Reserve, Flow, Theta };

struct Variable {
  std::string name;
  double lb = -kInf;
  double ub = kInf;
  bool integral = false;
  std::optional<double> warm;  // warm-start hint, never restricts feasibility
};

struct LinTerm {
  int var = 0;
  double coef = 0.0;
};

struct Constraint {
  std::string name;
  std::vector<LinTerm> terms;
  Sense sense = Sense::LE;
  double rhs = 0.0;
};

struct ModelStats {
  int n_binaries = 0;
  int n_continuous = 0;
  int n_constraints = 0;
};

// Solver-agnostic linear model. Builders fill it, the solver and the
// reduction engine consume it. Handles are plain indices.
class MilpModel {
 public:
  int add_variable(std::string name, double lb, double ub, bool integral);
  int add_constraint(std::string name, std::vector<LinTerm> terms, Sense sense, double rhs);

  void set_objective_term(int var, double coef);
  void add_objective_term(int var, double coef);
  void set_objective_constant(double c) { obj_constant_ = c; }
  double objective_constant() const { return obj_constant_; }

  void register_var(VarKind kind, int index, int t, int var);
  void register_con(const std::string& kind, int index, int t, int con);
  // Registered handle lookups; throw std::out_of_range when absent.
  int var(VarKind kind, int index, int t) const;
  int con(const std::string& kind, int index, int t) const;
  bool has_var(VarKind kind, int index, int t) const;
  bool has_con(const std::string& kind, int index, int t) const;

  int n_vars() const { return static_cast<int>(vars_.size()); }
  int n_cons() const { return static_cast<int>(cons_.size()); }
  const Variable& variable(int i) const { return vars_.at(i); }
  Variable& variable(int i) { return vars_.at(i); }
  const Constraint& constraint(int i) const { return cons_.at(i); }
  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return cons_; }
  const std::vector<double>& objective() const { return obj_; }  // dense by var index

  // Pins a variable to a constant via equal bounds (binaries stay binary).
  void fix_variable(int var, double value);

  ModelStats stats() const;
  // Cheap structural sanity: bounds ordered, handles resolve, binaries in [0,1].
  void check_well_formed() const;

 private:
  std::vector<Variable> vars_;
  std::vector<Constraint> cons_;
  std::vector<double> obj_;
  double obj_constant_ = 0.0;
  std::map<std::tuple<int, int, int>, int> var_reg_;
  std::map<std::tuple<std::string, int, int>, int> con_reg_;
};

}  // namespace rscuc
