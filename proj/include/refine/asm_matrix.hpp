#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace refine {

struct AsmStats {
  int nu = 0;
  int mu = 0;
  int rho1 = 0;
  int rho2 = 0;
  int rho3 = 0;
  int rho4 = 0;
};

// An n x n alternating sign matrix: entries in {-1,0,1}, unit row and column
// sums, nonzero entries alternating in sign along rows and columns.
class AsmMatrix {
 public:
  // Validates the candidate; throws std::invalid_argument on violation.
  static AsmMatrix validate(const std::vector<std::vector<int>>& rows);

  static AsmMatrix identity(int n);

  int n() const { return n_; }
  int at(int i, int j) const { return entries_[i * n_ + j]; }

  friend bool operator==(const AsmMatrix& a, const AsmMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const AsmMatrix& a, const AsmMatrix& b) {
    return a.entries_ < b.entries_;
  }

  std::string to_json() const;
  static AsmMatrix from_json(const std::string& text);

 private:
  friend void enumerate_asms(int, const std::function<void(const AsmMatrix&)>&);
  friend AsmMatrix asm_star(const AsmMatrix&);
  friend AsmMatrix asm_dagger(const AsmMatrix&);
  AsmMatrix(int n, std::vector<std::int8_t> entries)
      : n_(n), entries_(std::move(entries)) {}

  int n_;
  std::vector<std::int8_t> entries_;
};

// Depth-first generation row by row over column partial-sum states; yields
// each element of ASM(n) exactly once in a deterministic order.
void enumerate_asms(int n, const std::function<void(const AsmMatrix&)>& yield);
std::vector<AsmMatrix> all_asms(int n);

AsmStats asm_stats(const AsmMatrix& a);

// Reflection in a vertical line: A*_{ij} = A_{i, n+1-j}.
AsmMatrix asm_star(const AsmMatrix& a);
// Rotation by pi: A†_{ij} = A_{n+1-i, n+1-j}.
AsmMatrix asm_dagger(const AsmMatrix& a);

}  // namespace refine
