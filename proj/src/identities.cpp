#include "refine/identities.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "refine/asm_matrix.hpp"
#include "refine/dpp.hpp"
#include "refine/lattice_paths.hpp"

namespace refine {

namespace {

const std::vector<Var> kGenFunVars = {Var::x, Var::y, Var::z1, Var::z2};

MPoly stat_monomial(int nu, int mu, int rho1, int rho2) {
  Exps e{};
  e[static_cast<int>(Var::x)] = nu;
  e[static_cast<int>(Var::y)] = mu;
  e[static_cast<int>(Var::z1)] = rho1;
  e[static_cast<int>(Var::z2)] = rho2;
  return MPoly::monomial(1, e);
}

MPoly var(Var v) { return MPoly::variable(v); }
MPoly one() { return MPoly(1); }

// Z with its two boundary variables renamed to (za, zb).
MPoly at_vars(const MPoly& z, Var za, Var zb) {
  return z.substitute({{Var::z1, var(za)}, {Var::z2, var(zb)}});
}

// Singly-refined slice Z(x, y, zv) = Z(x, y, zv, 1).
MPoly singly_at(const MPoly& z, Var zv) {
  return z.substitute({{Var::z1, var(zv)}, {Var::z2, one()}});
}

// The monomial image under the * functional equation:
// (p, m, k1, k2) -> (n(n-1)/2 - p - m, m, n-1-k1, n-1-k2).
MPoly reflect_poly(const MPoly& p, int n) {
  MPoly out;
  out.declare_vars(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Exps r = e;
    r[static_cast<int>(Var::x)] =
        n * (n - 1) / 2 - e[static_cast<int>(Var::x)] - e[static_cast<int>(Var::y)];
    r[static_cast<int>(Var::z1)] = n - 1 - e[static_cast<int>(Var::z1)];
    r[static_cast<int>(Var::z2)] = n - 1 - e[static_cast<int>(Var::z2)];
    for (int i = 0; i < kNumVars; ++i)
      if (r[i] < 0) throw std::logic_error("reflect_poly: negative exponent");
    out += MPoly::monomial(c, r);
  }
  return out;
}

// Generates every strictly decreasing sequence n-1 >= lambda_1 > ... >
// lambda_t >= 1, including the empty one.
void for_each_lambda(int n, const std::function<void(const std::vector<int>&)>& yield) {
  std::vector<int> lambda;
  std::function<void(int)> rec = [&](int max) {
    yield(lambda);
    for (int v = max; v >= 1; --v) {
      lambda.push_back(v);
      rec(v - 1);
      lambda.pop_back();
    }
  };
  rec(n - 1);
}

}  // namespace

GenFun genfun_bruteforce(ObjectKind kind, int n, int cap) {
  if (n < 1) throw std::invalid_argument("genfun: n must be >= 1");
  if (n > cap) throw std::invalid_argument("genfun: enumeration cap exceeded");
  MPoly poly;
  if (kind == ObjectKind::ASM) {
    enumerate_asms(n, [&](const AsmMatrix& a) {
      AsmStats s = asm_stats(a);
      poly += stat_monomial(s.nu, s.mu, s.rho1, s.rho2);
    });
  } else {
    enumerate_dpps(n, [&](const Dpp& d) {
      DppStats s = dpp_stats(d);
      poly += stat_monomial(s.nu, s.mu, s.rho1, s.rho2);
    });
  }
  poly.declare_vars(kGenFunVars);
  return GenFun{kind, n, std::move(poly)};
}

MPoly genfun_bruteforce_singly(ObjectKind kind, int n, int cap) {
  return singly_at(genfun_bruteforce(kind, n, cap).poly, Var::z1);
}

Matrix<MPoly> k_matrix(int n, Refined refined) {
  if (n < 2) throw std::invalid_argument("k_matrix: n must be >= 2");
  Matrix<MPoly> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MPoly entry;
      if (refined == Refined::doubly) {
        if (j <= n - 3)
          entry = path_weight_sum_closed(n, j, i);
        else if (j == n - 2)
          entry = var(Var::z2) * path_weight_sum_closed(n, j, i);
        else
          entry = path_weight_sum_closed(n, j, i);
      } else {
        if (j <= n - 2) {
          for (int k = 0; k <= std::min(i, j + 1); ++k) {
            Exps e{};
            e[static_cast<int>(Var::x)] = k;
            e[static_cast<int>(Var::y)] = i - k;
            entry += MPoly::monomial(binomial(i - 1, i - k) * binomial(j + 1, k), e);
          }
        } else {
          for (int k = 0; k <= i; ++k)
            for (int l = 0; l <= k; ++l) {
              Exps e{};
              e[static_cast<int>(Var::x)] = k;
              e[static_cast<int>(Var::y)] = i - k;
              e[static_cast<int>(Var::z1)] = l;
              entry += MPoly::monomial(binomial(i - 1, i - k) * binomial(n - l - 1, k - l), e);
            }
        }
      }
      if (i == j + 1) entry -= one();
      m.at(i, j) = std::move(entry);
    }
  return m;
}

std::vector<MPoly> c_vector_at(int n, Var z) {
  if (n < 2) throw std::invalid_argument("c_vector: n must be >= 2");
  std::vector<MPoly> out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= i; ++k)
      for (int l = 0; l <= k; ++l) {
        Exps e{};
        e[static_cast<int>(Var::x)] = k;
        e[static_cast<int>(Var::y)] = i - k;
        e[static_cast<int>(z)] = l + 1;
        out[i] += MPoly::monomial(binomial(i - 1, i - k) * binomial(n - l - 2, k - l), e);
      }
  return out;
}

std::vector<MPoly> c_vector(int n, CWhich which) {
  if (which == CWhich::one_z) return c_vector_at(n, Var::z1);
  if (n < 2) throw std::invalid_argument("c_vector: n must be >= 2");
  std::vector<MPoly> out(n);
  for (int i = 0; i < n; ++i) out[i] = path_weight_sum_closed(n, n - 1, i);
  return out;
}

Matrix<MPoly> l_matrix(int n) {
  if (n < 2) throw std::invalid_argument("l_matrix: n must be >= 2");
  Matrix<MPoly> m(n, n);
  auto c1 = c_vector_at(n, Var::z1), c2 = c_vector_at(n, Var::z2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MPoly entry;
      if (j <= n - 3) {
        entry = path_weight_sum_closed(n, j, i);
        if (i == j + 1) entry -= one();
      } else {
        entry = j == n - 2 ? c1[i] : c2[i];
        if (i == n - 1) entry -= one();
      }
      m.at(i, j) = std::move(entry);
    }
  return m;
}

Matrix<MPoly> l_matrix_augmented(int n) {
  Matrix<MPoly> base = l_matrix(n);
  Matrix<MPoly> m(n, n + 2);
  auto c3 = c_vector_at(n, Var::z3), c4 = c_vector_at(n, Var::z4);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = base.at(i, j);
    m.at(i, n) = c3[i];
    m.at(i, n + 1) = c4[i];
    if (i == n - 1) {
      m.at(i, n) -= one();
      m.at(i, n + 1) -= one();
    }
  }
  return m;
}

bool verify_theorem1(int n, int cap) {
  MPoly za = genfun_bruteforce(ObjectKind::ASM, n, cap).poly;
  MPoly zd = genfun_bruteforce(ObjectKind::DPP, n, cap).poly;
  if (za != zd) return false;
  if (n == 1) return za == one();
  return za == det(k_matrix(n, Refined::doubly));
}

bool verify_theorem2(int n, Propeq form, int cap) {
  if (n < 2) throw std::invalid_argument("verify_theorem2: n must be >= 2");
  for (ObjectKind kind : {ObjectKind::ASM, ObjectKind::DPP}) {
    MPoly zn = genfun_bruteforce(kind, n, cap).poly;
    if (form == Propeq::propeq1) {
      MPoly zm = genfun_bruteforce(kind, n - 1, cap).poly;
      MPoly zm1 = zm.substitute({{Var::z1, one()}, {Var::z2, one()}});
      MPoly lhs = (var(Var::z1) - var(Var::z2)) * zn * zm1;
      MPoly rhs = (var(Var::z1) - one()) * var(Var::z2) * singly_at(zn, Var::z1) *
                      singly_at(zm, Var::z2) -
                  var(Var::z1) * (var(Var::z2) - one()) * singly_at(zm, Var::z1) *
                      singly_at(zn, Var::z2);
      if (lhs != rhs) return false;
    } else {
      auto z = [&](Var a, Var b) { return at_vars(zn, a, b); };
      auto d = [](Var a, Var b) { return var(a) - var(b); };
      MPoly total = d(Var::z1, Var::z2) * d(Var::z3, Var::z4) * z(Var::z1, Var::z2) *
                        z(Var::z3, Var::z4) -
                    d(Var::z1, Var::z3) * d(Var::z2, Var::z4) * z(Var::z1, Var::z3) *
                        z(Var::z2, Var::z4) +
                    d(Var::z1, Var::z4) * d(Var::z2, Var::z3) * z(Var::z1, Var::z4) *
                        z(Var::z2, Var::z3);
      if (!total.is_zero()) return false;
    }
  }
  return true;
}

bool verify_specializations(int n, int cap) {
  if (n < 2) throw std::invalid_argument("verify_specializations: n must be >= 2");
  for (ObjectKind kind : {ObjectKind::ASM, ObjectKind::DPP}) {
    MPoly zn = genfun_bruteforce(kind, n, cap).poly;
    MPoly singly_brute;
    if (kind == ObjectKind::ASM) {
      enumerate_asms(n, [&](const AsmMatrix& a) {
        AsmStats s = asm_stats(a);
        singly_brute += stat_monomial(s.nu, s.mu, s.rho1, 0);
      });
    } else {
      enumerate_dpps(n, [&](const Dpp& d) {
        DppStats s = dpp_stats(d);
        singly_brute += stat_monomial(s.nu, s.mu, s.rho1, 0);
      });
    }
    if (singly_at(zn, Var::z1) != singly_brute) return false;

    MPoly zm = genfun_bruteforce(kind, n - 1, cap).poly;
    MPoly zm_singly = singly_at(zm, Var::z1);
    if (zn.substitute(Var::z2, MPoly(0)) != zm_singly) return false;
    if (zn.substitute(Var::z1, MPoly(0)) !=
        zm.substitute({{Var::z1, var(Var::z2)}, {Var::z2, one()}}))
      return false;
    if (n >= 3) {
      MPoly zk = genfun_bruteforce(kind, n - 2, cap).poly;
      if (zn.substitute({{Var::z1, MPoly(0)}, {Var::z2, MPoly(0)}}) !=
          zk.substitute({{Var::z1, one()}, {Var::z2, one()}}))
        return false;
    }
    if (zn.substitute({{Var::z1, var(Var::z2)}, {Var::z2, var(Var::z1)}}) != zn) return false;
  }
  return true;
}

BigInt asm_count(int n) {
  if (n < 0) throw std::invalid_argument("asm_count: negative n");
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= Rational(factorial(3 * i + 1)) / Rational(factorial(n + i));
  if (r.get_den() != 1) throw std::logic_error("asm_count: non-integer product");
  return r.get_num();
}

BigInt asm_count_refined(int n, int k) {
  if (k < 0 || k > n - 1) return 0;
  Rational r = Rational(factorial(n + k - 1) * factorial(2 * n - k - 2)) /
               Rational(factorial(2 * n - 2) * factorial(k) * factorial(n - k - 1));
  for (int l = 0; l <= n - 2; ++l)
    r *= Rational(factorial(3 * l + 1)) / Rational(factorial(n + l - 1));
  if (r.get_den() != 1) throw std::logic_error("asm_count_refined: non-integer value");
  return r.get_num();
}

CountTable refined_counts(int n) {
  if (n < 2) throw std::invalid_argument("refined_counts: n must be >= 2");
  CountTable t;
  t.n = n;
  t.a_n = asm_count(n);
  for (int k = 0; k < n; ++k) t.a_nk.push_back(asm_count_refined(n, k));

  const BigInt am = asm_count(n - 1);
  auto ank = [&](int nn, int k) { return asm_count_refined(nn, k); };
  t.a_nij = Matrix<BigInt>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BigInt sum = 0;
      for (int k = 0; k <= std::min(i, n - j - 1); ++k)
        sum += ank(n, i - k) * ank(n - 1, j + k) - ank(n, i - k - 1) * ank(n - 1, j + k) -
               ank(n - 1, i - k - 1) * ank(n, j + k + 1) +
               ank(n - 1, i - k - 1) * ank(n, j + k);
      if (sum % am != 0) throw std::logic_error("refined_counts: non-integer table entry");
      t.a_nij.at(i, j) = sum / am;
    }

  BigInt krow = 0, ijsum = 0;
  for (int k = 0; k < n; ++k) krow += t.a_nk[k];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ijsum += t.a_nij.at(i, j);
  if (krow != t.a_n || ijsum != t.a_n)
    throw std::logic_error("refined_counts: sums disagree with the total");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.a_nij.at(i, j) != t.a_nij.at(j, i))
        throw std::logic_error("refined_counts: table not symmetric");
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      BigInt lhs = (t.a_nij.at(i - 1, j) - t.a_nij.at(i, j - 1)) * am;
      BigInt rhs = ank(n, i - 1) * ank(n - 1, j - 1) - ank(n, i) * ank(n - 1, j - 1) -
                   ank(n - 1, i - 1) * ank(n, j - 1) + ank(n - 1, i - 1) * ank(n, j);
      if (lhs != rhs) throw std::logic_error("refined_counts: recursion violated");
    }
  return t;
}

MPoly perm_genfun(int n) {
  if (n < 2) throw std::invalid_argument("perm_genfun: n must be >= 2");
  MPoly qfac = one();
  for (int m = 1; m <= n - 2; ++m) {
    MPoly bracket;
    for (int p = 0; p < m; ++p) {
      Exps e{};
      e[static_cast<int>(Var::x)] = p;
      bracket += MPoly::monomial(1, e);
    }
    qfac *= bracket;
  }
  MPoly sum;
  auto mono = [](int p, int k1, int k2) {
    Exps e{};
    e[static_cast<int>(Var::x)] = p;
    e[static_cast<int>(Var::z1)] = k1;
    e[static_cast<int>(Var::z2)] = k2;
    return MPoly::monomial(1, e);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      sum += mono(n + i - j - 1, i, n - j - 1);
      sum += mono(n - i + j - 2, n - i - 1, j);
    }
  return qfac * sum;
}

bool verify_symmetry_laws(int n, int cap) {
  if (n < 2) throw std::invalid_argument("verify_symmetry_laws: n must be >= 2");
  std::map<std::tuple<int, int, int, int>, int> asm_counts, dpp_counts;
  bool ok = true;
  enumerate_asms(n, [&](const AsmMatrix& a) {
    AsmStats s = asm_stats(a);
    ++asm_counts[{s.nu, s.mu, s.rho1, s.rho2}];
    AsmStats st = asm_stats(asm_star(a));
    AsmStats sd = asm_stats(asm_dagger(a));
    ok = ok && st.nu == n * (n - 1) / 2 - s.nu - s.mu && st.mu == s.mu &&
         st.rho1 == n - 1 - s.rho1 && st.rho2 == n - 1 - s.rho2;
    ok = ok && sd.nu == s.nu && sd.mu == s.mu && sd.rho1 == s.rho2 && sd.rho2 == s.rho1;
    ok = ok && asm_star(asm_star(a)) == a && asm_dagger(asm_dagger(a)) == a;
  });
  enumerate_dpps(n, [&](const Dpp& d) {
    DppStats s = dpp_stats(d);
    ++dpp_counts[{s.nu, s.mu, s.rho1, s.rho2}];
    DppStats st = dpp_stats(dpp_star(d));
    DppStats sd = dpp_stats(dpp_dagger(d));
    ok = ok && st.nu == n * (n - 1) / 2 - s.nu - s.mu && st.mu == s.mu &&
         st.rho1 == n - 1 - s.rho1 && st.rho2 == n - 1 - s.rho2;
    ok = ok && sd.nu == s.nu && sd.mu == s.mu && sd.rho1 == s.rho2 && sd.rho2 == s.rho1;
    ok = ok && dpp_star(dpp_star(d)) == d && dpp_dagger(dpp_dagger(d)) == d;
  });
  if (!ok) return false;

  for (ObjectKind kind : {ObjectKind::ASM, ObjectKind::DPP}) {
    MPoly z = genfun_bruteforce(kind, n, cap).poly;
    if (reflect_poly(z, n) != z) return false;
  }
  for (int k = 0; k < n; ++k) {
    std::tuple<int, int, int, int> key{k * (k + 1) / 2, k * (n - k - 1), k, k};
    if (asm_counts[key] != 1 || dpp_counts[key] != 1) return false;
  }
  return true;
}

bool verify_star_invariant_equality(int n, int cap) {
  if (n % 2 == 0) throw std::invalid_argument("verify_star_invariant_equality: n must be odd");
  if (n > cap) throw std::invalid_argument("verify_star_invariant_equality: cap exceeded");
  std::map<std::tuple<int, int, int, int>, int> asm_counts, dpp_counts;
  enumerate_asms(n, [&](const AsmMatrix& a) {
    if (!(asm_star(a) == a)) return;
    AsmStats s = asm_stats(a);
    ++asm_counts[{s.nu, s.mu, s.rho1, s.rho2}];
  });
  enumerate_dpps(n, [&](const Dpp& d) {
    if (!(dpp_star(d) == d)) return;
    DppStats s = dpp_stats(d);
    ++dpp_counts[{s.nu, s.mu, s.rho1, s.rho2}];
  });
  return asm_counts == dpp_counts;
}

bool verify_boundary_relations(int n, int cap) {
  if (n < 2) throw std::invalid_argument("verify_boundary_relations: n must be >= 2");
  if (n > cap) throw std::invalid_argument("verify_boundary_relations: cap exceeded");
  // zz[i][j] = sum of x^nu y^mu z1^rho_{i+1} z2^rho_{j+1}
  MPoly zz[4][4];
  enumerate_asms(n, [&](const AsmMatrix& a) {
    AsmStats s = asm_stats(a);
    const int rho[4] = {s.rho1, s.rho2, s.rho3, s.rho4};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        zz[i][j] += stat_monomial(s.nu, s.mu, rho[i], rho[j]);
      }
  });
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (zz[i][j] != zz[j][i]) return false;
  if (zz[0][1] != genfun_bruteforce(ObjectKind::ASM, n, cap).poly) return false;
  if (zz[0][1] != zz[2][3]) return false;
  if (zz[0][2] != zz[1][3]) return false;
  if (zz[0][2] != reflect_poly(zz[0][3], n)) return false;
  if (zz[0][2] != reflect_poly(zz[1][2], n)) return false;
  return true;
}

bool verify_det_subset_identity(int trials, int n, std::uint64_t seed) {
  if (n < 1 || n > 6) throw std::invalid_argument("verify_det_subset_identity: need 1 <= n <= 6");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int t = 0; t < trials; ++t) {
    Matrix<BigInt> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    if (!check_det_subset(m)) return false;
  }
  return true;
}

bool verify_desnanot_jacobi_random(int trials, int n, std::uint64_t seed) {
  if (n < 2 || n > 6) throw std::invalid_argument("verify_desnanot_jacobi_random: need 2 <= n <= 6");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  auto random_matrix = [&](std::size_t rows, std::size_t cols) {
    Matrix<BigInt> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    return m;
  };
  auto random_indices = [&](std::size_t limit, std::size_t count) {
    std::vector<std::size_t> all(limit);
    for (std::size_t i = 0; i < limit; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
  };
  for (int t = 0; t < trials; ++t) {
    const std::size_t size = 2 + rng() % (n - 1);
    {
      Matrix<BigInt> m = random_matrix(size, size);
      auto rows = random_indices(size, 2);
      auto cols = random_indices(size, 2);
      if (!check_desnanot_jacobi(m, DesnanotJacobiForm::classic,
                                 {rows[0], rows[1], cols[0], cols[1]}))
        return false;
    }
    {
      Matrix<BigInt> m = random_matrix(size + 2, size);
      auto rows = random_indices(size + 2, 4);
      if (!check_desnanot_jacobi(m, DesnanotJacobiForm::two_column, rows)) return false;
    }
    {
      Matrix<BigInt> m = random_matrix(size + 1, size);
      auto rows = random_indices(size + 1, 3);
      const std::size_t col = rng() % size;
      if (!check_desnanot_jacobi(m, DesnanotJacobiForm::mixed,
                                 {rows[0], rows[1], rows[2], col}))
        return false;
    }
  }
  return true;
}

bool verify_lgv(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("verify_lgv: need 2 <= n <= 4");
  std::vector<Dpp> dpps = all_dpps(n);
  // Precompute single-path weight sums from (0, j) to (i, 0).
  std::vector<std::vector<MPoly>> ps(n, std::vector<MPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ps[i][j] = path_weight_sum_bruteforce(n, j, i);
  bool ok = true;
  for_each_lambda(n, [&](const std::vector<int>& lambda) {
    if (!ok) return;
    const int t = static_cast<int>(lambda.size());
    MPoly lhs;
    for (const Dpp& d : dpps) {
      std::vector<int> shape;
      for (const auto& row : d.rows()) shape.push_back(static_cast<int>(row.size()));
      if (shape != lambda) continue;
      lhs += family_weight(dpp_to_nilp(d));
    }
    Matrix<MPoly> m(t + 1, t + 1);
    for (int i = 0; i <= t; ++i)
      for (int j = 0; j <= t; ++j) {
        const int start_row = (i == 0 ? n : lambda[i - 1]) - 1;
        const int end_col = j == t ? 0 : lambda[j];
        m.at(i, j) = ps[end_col][start_row];
      }
    ok = lhs == det(m);
  });
  return ok;
}

bool verify_dpplgv1(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("verify_dpplgv1: need 2 <= n <= 4");
  std::vector<std::vector<MPoly>> ps(n, std::vector<MPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ps[i][j] = path_weight_sum_bruteforce(n, j, i);
  MPoly total;
  for_each_lambda(n, [&](const std::vector<int>& lambda) {
    const int t = static_cast<int>(lambda.size());
    // rows i = 0, lambda_t, ..., lambda_1; columns j = lambda_t - 1, ...,
    // lambda_1 - 1, n - 1 (both ascending)
    std::vector<int> row_idx{0}, col_idx;
    for (int a = t - 1; a >= 0; --a) row_idx.push_back(lambda[a]);
    for (int a = t - 1; a >= 0; --a) col_idx.push_back(lambda[a] - 1);
    col_idx.push_back(n - 1);
    Matrix<MPoly> m(t + 1, t + 1);
    for (int r = 0; r <= t; ++r)
      for (int c = 0; c <= t; ++c) m.at(r, c) = ps[row_idx[r]][col_idx[c]];
    MPoly term = det(m);
    if (t >= 1 && lambda[0] == n - 1) term *= var(Var::z2);
    total += term;
  });
  return total == genfun_bruteforce(ObjectKind::DPP, n, 6).poly;
}

bool verify_bazin_on_ll(int n, int cap) {
  if (n < 2) throw std::invalid_argument("verify_bazin_on_ll: n must be >= 2");
  Matrix<MPoly> t = l_matrix_augmented(n).transpose();
  std::vector<std::size_t> k;
  for (int i = 1; i <= 4; ++i) k.push_back(static_cast<std::size_t>(n + i - 3));
  if (!check_desnanot_jacobi(t, DesnanotJacobiForm::two_column, k)) return false;

  // Each minor deleting the rows carrying z_a and z_b must equal
  // (z_d - z_c) Z^DPP_n(x, y, z_c, z_d) for the remaining pair c < d.
  MPoly z = genfun_bruteforce(ObjectKind::DPP, n, cap).poly;
  const Var zv[4] = {Var::z1, Var::z2, Var::z3, Var::z4};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      std::vector<int> rest;
      for (int i = 0; i < 4; ++i)
        if (i != a && i != b) rest.push_back(i);
      MPoly minor = det(t.minor_matrix({k[a], k[b]}, {}));
      MPoly expected =
          (var(zv[rest[1]]) - var(zv[rest[0]])) * at_vars(z, zv[rest[0]], zv[rest[1]]);
      if (minor != expected) return false;
    }
  return true;
}

std::string GenFun::to_json() const {
  nlohmann::json j = nlohmann::json::parse(poly.to_json());
  j["kind"] = kind == ObjectKind::ASM ? "ASM" : "DPP";
  j["n"] = n;
  return j.dump();
}

GenFun GenFun::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  GenFun g;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "ASM")
    g.kind = ObjectKind::ASM;
  else if (kind == "DPP")
    g.kind = ObjectKind::DPP;
  else
    throw std::invalid_argument("genfun json: unknown kind " + kind);
  g.n = j.at("n").get<int>();
  g.poly = MPoly::from_json(text);
  return g;
}

}  // namespace refine
