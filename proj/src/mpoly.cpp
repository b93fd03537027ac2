#include "refine/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace refine {

namespace {
constexpr const char* kVarNames[kNumVars] = {"x", "y", "z1", "z2", "z3", "z4"};
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(const std::string& name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

MPoly::MPoly(const BigInt& c) {
  if (c != 0) terms_.emplace(Exps{}, c);
}

MPoly MPoly::variable(Var v) {
  MPoly p;
  Exps e{};
  e[static_cast<int>(v)] = 1;
  p.terms_.emplace(e, 1);
  p.vars_ = {v};
  return p;
}

MPoly MPoly::monomial(const BigInt& coeff, const Exps& exps) {
  MPoly p;
  if (coeff != 0) p.terms_.emplace(exps, coeff);
  for (int i = 0; i < kNumVars; ++i)
    if (exps[i] != 0) p.vars_.push_back(static_cast<Var>(i));
  return p;
}

BigInt MPoly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<Var> MPoly::used_vars() const {
  std::array<bool, kNumVars> used{};
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0) used[i] = true;
  std::vector<Var> out;
  for (int i = 0; i < kNumVars; ++i)
    if (used[i]) out.push_back(static_cast<Var>(i));
  return out;
}

MPoly& MPoly::declare_vars(const std::vector<Var>& vs) {
  merge_vars(vs);
  return *this;
}

void MPoly::merge_vars(const std::vector<Var>& other) {
  std::array<bool, kNumVars> present{};
  for (Var v : vars_) present[static_cast<int>(v)] = true;
  for (Var v : other) present[static_cast<int>(v)] = true;
  vars_.clear();
  for (int i = 0; i < kNumVars; ++i)
    if (present[i]) vars_.push_back(static_cast<Var>(i));
}

void MPoly::add_term(const Exps& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  merge_vars(o.vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  merge_vars(o.vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  out.vars_ = a.vars_;
  out.merge_vars(b.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exps e;
      for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly out(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) out *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return out;
}

Rational MPoly::eval(const std::map<Var, Rational>& point) const {
  for (Var v : used_vars())
    if (!point.count(v))
      throw std::invalid_argument(std::string("eval: missing assignment for ") + var_name(v));
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term(c);
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0) term *= refine::pow(point.at(static_cast<Var>(i)), e[i]);
    total += term;
  }
  return total;
}

MPoly MPoly::substitute(const std::map<Var, MPoly>& sub) const {
  MPoly out;
  out.vars_ = vars_;
  for (const auto& [v, p] : sub) {
    (void)v;
    out.merge_vars(p.vars());
  }
  for (const auto& [e, c] : terms_) {
    Exps kept = e;
    MPoly term(c);
    for (int i = 0; i < kNumVars; ++i) {
      auto it = sub.find(static_cast<Var>(i));
      if (it != sub.end() && e[i] != 0) {
        kept[i] = 0;
        term *= it->second.pow(static_cast<unsigned>(e[i]));
      }
    }
    term = term * MPoly::monomial(1, kept);
    out += term;
  }
  out.merge_vars(vars_);
  return out;
}

MPoly MPoly::substitute(Var v, const MPoly& p) const {
  return substitute(std::map<Var, MPoly>{{v, p}});
}

MPoly MPoly::divexact(const MPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("divexact: division by zero");
  MPoly quotient;
  quotient.vars_ = vars_;
  MPoly rem = *this;
  const auto& [de, dc] = *divisor.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    Exps qe;
    for (int i = 0; i < kNumVars; ++i) {
      qe[i] = re[i] - de[i];
      if (qe[i] < 0) throw std::domain_error("divexact: inexact polynomial division");
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t()))
      throw std::domain_error("divexact: inexact coefficient division");
    BigInt qc = rc / dc;
    MPoly t = MPoly::monomial(qc, qe);
    quotient += t;
    rem -= t * divisor;
  }
  return quotient;
}

std::string MPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest-degree terms last, matching the stored order
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    BigInt a = abs(c);
    bool have_vars = false;
    for (int i = 0; i < kNumVars; ++i) have_vars |= e[i] != 0;
    if (a != 1 || !have_vars) os << a.get_str();
    bool printed = a != 1 || !have_vars;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << kVarNames[i];
      if (e[i] != 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

std::string MPoly::to_json() const {
  nlohmann::json j;
  j["vars"] = nlohmann::json::array();
  for (Var v : vars_) j["vars"].push_back(var_name(v));
  j["terms"] = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::json t;
    t["c"] = c.get_str();
    t["e"] = nlohmann::json::array();
    for (Var v : vars_) t["e"].push_back(e[static_cast<int>(v)]);
    // reject silent truncation: terms must live inside the declared vars
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] != 0 &&
          std::find(vars_.begin(), vars_.end(), static_cast<Var>(i)) == vars_.end())
        throw std::logic_error("to_json: term uses undeclared variable");
    }
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

MPoly MPoly::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  MPoly p;
  std::vector<Var> vars;
  for (const auto& name : j.at("vars")) {
    auto v = var_from_name(name.get<std::string>());
    if (!v) throw std::invalid_argument("from_json: unknown variable " + name.get<std::string>());
    vars.push_back(*v);
  }
  p.vars_ = vars;
  for (const auto& t : j.at("terms")) {
    const auto& ev = t.at("e");
    if (ev.size() != vars.size()) throw std::invalid_argument("from_json: exponent arity mismatch");
    Exps e{};
    for (std::size_t i = 0; i < vars.size(); ++i)
      e[static_cast<int>(vars[i])] = ev[i].get<int>();
    p.add_term(e, BigInt(t.at("c").get<std::string>()));
  }
  return p;
}

}  // namespace refine
