#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "refine/matrix.hpp"
#include "refine/mpoly.hpp"
#include "refine/numeric.hpp"

namespace refine {

enum class ObjectKind { ASM, DPP };

// A doubly-refined generating function: the four-variable polynomial
// sum over ASM(n) or DPP(n) of x^nu y^mu z1^rho1 z2^rho2.
struct GenFun {
  ObjectKind kind = ObjectKind::ASM;
  int n = 0;
  MPoly poly;

  std::string to_json() const;
  static GenFun from_json(const std::string& text);
};

inline constexpr int kEnumerationCap = 6;

GenFun genfun_bruteforce(ObjectKind kind, int n, int cap = kEnumerationCap);
// Three-statistic brute force: sum of x^nu y^mu z1^rho1.
MPoly genfun_bruteforce_singly(ObjectKind kind, int n, int cap = kEnumerationCap);

enum class Refined { singly, doubly };

// The n x n matrix whose determinant equals the refined generating function;
// requires n >= 2. The singly-refined variant uses z1 for its z.
Matrix<MPoly> k_matrix(int n, Refined refined);

enum class CWhich { one_z, two_z };

// The column vectors C_n: one_z gives C_n(x,y,z)_i with z = z1 (use
// c_vector_at for another z variable); two_z gives C_n(x,y,z1,z2)_i.
std::vector<MPoly> c_vector(int n, CWhich which);
std::vector<MPoly> c_vector_at(int n, Var z);

// The transformed matrix with det L_n = (z2 - z1) Z^DPP_n; requires n >= 2.
Matrix<MPoly> l_matrix(int n);
// The n x (n+2) augmentation appending the z3 and z4 columns.
Matrix<MPoly> l_matrix_augmented(int n);

bool verify_theorem1(int n, int cap = kEnumerationCap);

enum class Propeq { propeq1, propeq2 };
bool verify_theorem2(int n, Propeq form, int cap = kEnumerationCap);

bool verify_specializations(int n, int cap = kEnumerationCap);

// Exact refined enumeration: total count, singly-refined counts by boundary
// position, and the doubly-refined table.
struct CountTable {
  int n = 0;
  BigInt a_n;
  std::vector<BigInt> a_nk;   // k = 0 .. n-1
  Matrix<BigInt> a_nij;       // n x n
};

// Total count A_n from the product formula (valid for n >= 0).
BigInt asm_count(int n);
// Singly-refined count A_{n,k}; returns 0 outside 0 <= k <= n-1.
BigInt asm_count_refined(int n, int k);

CountTable refined_counts(int n);

// Closed form for Z_n(x, 0, z1, z2), the permutation-matrix slice.
MPoly perm_genfun(int n);

bool verify_symmetry_laws(int n, int cap = kEnumerationCap);
// n must be odd.
bool verify_star_invariant_equality(int n, int cap = kEnumerationCap);
bool verify_boundary_relations(int n, int cap = kEnumerationCap);

// The subset identity det(M - delta_{i,j+1}) = sum over S of bordered minors.
template <class S>
bool check_det_subset(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("check_det_subset: non-square matrix");
  const std::size_t n = m.rows();
  Matrix<S> shifted = m;
  for (std::size_t i = 1; i < n; ++i) shifted.at(i, i - 1) = shifted.at(i, i - 1) - S(1);
  S lhs = det(shifted);
  S rhs = S(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<std::size_t> rows{0}, cols;
    for (std::size_t s = 1; s < n; ++s)
      if (mask >> (s - 1) & 1) {
        rows.push_back(s);
        cols.push_back(s - 1);
      }
    cols.push_back(n - 1);
    rhs = rhs + det(m.select(rows, cols));
  }
  return lhs == rhs;
}

bool verify_det_subset_identity(int trials, int n, std::uint64_t seed);

// Randomized exact checks of the three Desnanot-Jacobi forms.
bool verify_desnanot_jacobi_random(int trials, int n, std::uint64_t seed);

// Lindstrom-Gessel-Viennot: for each endpoint tuple (strict lambda sequence),
// the determinant of single-path sums equals the weighted sum over
// nonintersecting families.
bool verify_lgv(int n);

// Reassembly of Z^DPP_n from the bordered determinants over all strict
// lambda sequences, with the z2^delta factor.
bool verify_dpplgv1(int n);

// The two-column Desnanot-Jacobi form applied to the transpose of the
// augmented L matrix, reproducing the DPP case of the six-factor identity.
bool verify_bazin_on_ll(int n, int cap = kEnumerationCap);

}  // namespace refine
