#include "rscuc/milp.hpp"

#include <cmath>
#include <stdexcept>

namespace rscuc {

int MilpModel::add_variable(std::string name, double lb, double ub, bool integral) {
  if (lb > ub) throw std::invalid_argument("variable '" + name + "': lb > ub");
  Variable v;
  v.name = std::move(name);
  v.lb = lb;
  v.ub = ub;
  v.integral = integral;
  vars_.push_back(std::move(v));
  obj_.push_back(0.0);
  return static_cast<int>(vars_.size()) - 1;
}

int MilpModel::add_constraint(std::string name, std::vector<LinTerm> terms, Sense sense, double rhs) {
  for (const LinTerm& t : terms)
    if (t.var < 0 || t.var >= n_vars())
      throw std::invalid_argument("constraint '" + name + "': bad variable handle");
  Constraint c;
  c.name = std::move(name);
  c.terms = std::move(terms);
  c.sense = sense;
  c.rhs = rhs;
  cons_.push_back(std::move(c));
  return static_cast<int>(cons_.size()) - 1;
}

void MilpModel::set_objective_term(int var, double coef) { obj_.at(var) = coef; }
void MilpModel::add_objective_term(int var, double coef) { obj_.at(var) += coef; }

void MilpModel::register_var(VarKind kind, int index, int t, int var) {
  var_reg_[{static_cast<int>(kind), index, t}] = var;
}
void MilpModel::register_con(const std::string& kind, int index, int t, int con) {
  con_reg_[{kind, index, t}] = con;
}

int MilpModel::var(VarKind kind, int index, int t) const {
  return var_reg_.at({static_cast<int>(kind), index, t});
}
int MilpModel::con(const std::string& kind, int index, int t) const {
  return con_reg_.at({kind, index, t});
}
bool MilpModel::has_var(VarKind kind, int index, int t) const {
  return var_reg_.count({static_cast<int>(kind), index, t}) > 0;
}
bool MilpModel::has_con(const std::string& kind, int index, int t) const {
  return con_reg_.count({kind, index, t}) > 0;
}

void MilpModel::fix_variable(int var, double value) {
  Variable& v = vars_.at(var);
  if (value < v.lb - 1e-9 || value > v.ub + 1e-9)
    throw std::invalid_argument("fix_variable: value outside bounds of '" + v.name + "'");
  v.lb = value;
  v.ub = value;
}

ModelStats MilpModel::stats() const {
  ModelStats s;
  for (const Variable& v : vars_) {
    if (v.integral)
      ++s.n_binaries;
    else
      ++s.n_continuous;
  }
  s.n_constraints = n_cons();
  return s;
}

void MilpModel::check_well_formed() const {
  for (const Variable& v : vars_) {
    if (v.lb > v.ub) throw std::logic_error("model: lb > ub on '" + v.name + "'");
    if (v.integral && (v.lb < -1e-9 || v.ub > 1 + 1e-9))
      throw std::logic_error("model: binary bounds outside [0,1] on '" + v.name + "'");
  }
  for (const auto& [key, idx] : var_reg_)
    if (idx < 0 || idx >= n_vars()) throw std::logic_error("model: dangling variable handle");
  for (const auto& [key, idx] : con_reg_)
    if (idx < 0 || idx >= n_cons()) throw std::logic_error("model: dangling constraint handle");
}

}  // namespace rscuc
