#include "refine/six_vertex.hpp"

#include <stdexcept>

#include <json.hpp>

#include "refine/matrix.hpp"

namespace refine {

SvConfig asm_to_sv(const AsmMatrix& a) {
  const int n = a.n();
  std::vector<std::int8_t> types(n * n);
  for (int i = 0; i < n; ++i) {
    int row_sum = 0;  // partial row sum left of the current cell
    for (int j = 0; j < n; ++j) {
      int col_sum = 0;  // partial column sum above the current cell
      for (int i2 = 0; i2 < i; ++i2) col_sum += a.at(i2, j);
      const int e = a.at(i, j);
      int type;
      if (e == 1)
        type = 5;
      else if (e == -1)
        type = 6;
      else if (row_sum == 0 && col_sum == 0)
        type = 1;
      else if (row_sum == 1 && col_sum == 1)
        type = 2;
      else if (row_sum == 1 && col_sum == 0)
        type = 3;
      else
        type = 4;
      types[i * n + j] = static_cast<std::int8_t>(type);
      row_sum += e;
    }
  }
  return SvConfig(n, std::move(types));
}

AsmMatrix sv_to_asm(const SvConfig& c) {
  const int n = c.n();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (c.type_at(i, j) == 5) rows[i][j] = 1;
      if (c.type_at(i, j) == 6) rows[i][j] = -1;
    }
  return AsmMatrix::validate(rows);
}

SvConfig SvConfig::validate(const std::vector<std::vector<int>>& types) {
  const int n = static_cast<int>(types.size());
  if (n < 1) throw std::invalid_argument("sv: empty grid");
  std::vector<std::int8_t> flat;
  for (const auto& row : types) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("sv: not square");
    for (int t : row) {
      if (t < 1 || t > 6) throw std::invalid_argument("sv: vertex type outside 1..6");
      flat.push_back(static_cast<std::int8_t>(t));
    }
  }
  SvConfig c(n, std::move(flat));
  // Edge consistency and DWBC hold exactly when the type grid is the image
  // of its own induced ASM.
  AsmMatrix a = sv_to_asm(c);
  if (!(asm_to_sv(a) == c))
    throw std::invalid_argument("sv: inconsistent edge orientations");
  return c;
}

int SvConfig::count(int k) const {
  int total = 0;
  for (auto t : types_) total += t == k;
  return total;
}

int SvConfig::count_in_row(int i, int k) const {
  int total = 0;
  for (int j = 0; j < n_; ++j) total += type_at(i, j) == k;
  return total;
}

SvStats sv_stats(const SvConfig& c) {
  SvStats s;
  s.nu = c.count(1);
  s.mu = c.count(6);
  s.rho1 = c.count_in_row(0, 1);
  s.rho2 = c.count_in_row(c.n() - 1, 2);
  return s;
}

Rational weight_a(const Rational& q, const Rational& u, const Rational& v) {
  return u * q - v / q;
}

Rational weight_b(const Rational& q, const Rational& u, const Rational& v) {
  return u / q - v * q;
}

Rational weight_c(const Rational& q, const Rational& u_sqrt, const Rational& v_sqrt) {
  return (q * q - 1 / (q * q)) * u_sqrt * v_sqrt;
}

namespace {

Rational vertex_weight(int type, const Rational& q, const SpectralPoint& pt, int i, int j) {
  switch (type) {
    case 1:
    case 2:
      return weight_a(q, pt.u(i), pt.v(j));
    case 3:
    case 4:
      return weight_b(q, pt.u(i), pt.v(j));
    default:
      return weight_c(q, pt.u_sqrt[i], pt.v_sqrt[j]);
  }
}

}  // namespace

Rational sv_partition_function(int n, const SpectralPoint& pt, int cap) {
  if (n > cap) throw std::invalid_argument("sv_partition_function: n exceeds brute-force cap");
  if (static_cast<int>(pt.u_sqrt.size()) != n || static_cast<int>(pt.v_sqrt.size()) != n)
    throw std::invalid_argument("sv_partition_function: wrong parameter count");
  Rational total = 0;
  enumerate_asms(n, [&](const AsmMatrix& a) {
    SvConfig c = asm_to_sv(a);
    Rational w = 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w *= vertex_weight(c.type_at(i, j), pt.q, pt, i, j);
    total += w;
  });
  return total;
}

Rational ik_determinant(int n, const SpectralPoint& pt) {
  Rational pre_num = 1;
  Matrix<Rational> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational a = weight_a(pt.q, pt.u(i), pt.v(j));
      Rational b = weight_b(pt.q, pt.u(i), pt.v(j));
      if (a == 0 || b == 0)
        throw std::invalid_argument("ik_determinant: vanishing a or b weight");
      pre_num *= a * b;
      m.at(i, j) = weight_c(pt.q, pt.u_sqrt[i], pt.v_sqrt[j]) / (a * b);
    }
  Rational pre_den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational du = pt.u(i) - pt.u(j);
      Rational dv = pt.v(j) - pt.v(i);
      if (du == 0 || dv == 0)
        throw std::invalid_argument("ik_determinant: coincident spectral parameters");
      pre_den *= du * dv;
    }
  return pre_num / pre_den * det(m);
}

bool verify_zczasm(int n, const Rational& q, const Rational& r_sqrt, const Rational& s_sqrt,
                   const Rational& t_sqrt, const Rational& w_sqrt) {
  if (n < 2) throw std::invalid_argument("verify_zczasm: n must be >= 2");
  SpectralPoint pt;
  pt.q = q;
  pt.u_sqrt.assign(n, r_sqrt);
  pt.u_sqrt.front() = s_sqrt;
  pt.u_sqrt.back() = t_sqrt;
  pt.v_sqrt.assign(n, w_sqrt);

  const Rational r = r_sqrt * r_sqrt, s = s_sqrt * s_sqrt, t = t_sqrt * t_sqrt,
                 w = w_sqrt * w_sqrt;
  const Rational arw = weight_a(q, r, w), brw = weight_b(q, r, w);
  const Rational asw = weight_a(q, s, w), bsw = weight_b(q, s, w);
  const Rational atw = weight_a(q, t, w), btw = weight_b(q, t, w);
  if (arw == 0 || brw == 0 || bsw == 0 || btw == 0)
    throw std::invalid_argument("verify_zczasm: degenerate parameter choice");

  const Rational x = (arw / brw) * (arw / brw);
  const Rational crw = weight_c(q, r_sqrt, w_sqrt);
  const Rational y = (crw / brw) * (crw / brw);
  const Rational z1 = asw * brw / (arw * bsw);
  const Rational z2 = atw * brw / (arw * btw);

  Rational prefactor = pow(brw, static_cast<long>(n - 1) * (n - 2)) *
                       pow(bsw * btw, n - 1) * pow(crw, n - 2) *
                       weight_c(q, s_sqrt, w_sqrt) * weight_c(q, t_sqrt, w_sqrt);

  Rational zasm = 0;
  enumerate_asms(n, [&](const AsmMatrix& a) {
    AsmStats st = asm_stats(a);
    zasm += pow(x, st.nu) * pow(y, st.mu) * pow(z1, st.rho1) * pow(z2, st.rho2);
  });

  Rational lhs = sv_partition_function(n, pt, n);
  return lhs == prefactor * zasm;
}

std::string SvConfig::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  auto rows = nlohmann::json::array();
  for (int i = 0; i < n_; ++i) {
    auto row = nlohmann::json::array();
    for (int k = 0; k < n_; ++k) row.push_back(type_at(i, k));
    rows.push_back(std::move(row));
  }
  j["types"] = std::move(rows);
  return j.dump();
}

SvConfig SvConfig::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  auto c = validate(j.at("types").get<std::vector<std::vector<int>>>());
  if (j.contains("n") && j.at("n").get<int>() != c.n())
    throw std::invalid_argument("sv json: n does not match types");
  return c;
}

}  // namespace refine
