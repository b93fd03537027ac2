#include "refine/asm_matrix.hpp"

#include <stdexcept>

#include <json.hpp>

namespace refine {

AsmMatrix AsmMatrix::validate(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw std::invalid_argument("asm: empty matrix");
  std::vector<std::int8_t> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("asm: not square");
    for (int v : row) {
      if (v < -1 || v > 1) throw std::invalid_argument("asm: entry outside {-1,0,1}");
      entries.push_back(static_cast<std::int8_t>(v));
    }
  }
  // Row and column prefix sums must stay in {0,1} and end at 1; this is
  // equivalent to unit sums plus sign alternation starting and ending at +1.
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) {
      s += entries[i * n + j];
      if (s < 0 || s > 1) throw std::invalid_argument("asm: row alternation violated");
    }
    if (s != 1) throw std::invalid_argument("asm: row sum != 1");
  }
  for (int j = 0; j < n; ++j) {
    int s = 0;
    for (int i = 0; i < n; ++i) {
      s += entries[i * n + j];
      if (s < 0 || s > 1) throw std::invalid_argument("asm: column alternation violated");
    }
    if (s != 1) throw std::invalid_argument("asm: column sum != 1");
  }
  return AsmMatrix(n, std::move(entries));
}

AsmMatrix AsmMatrix::identity(int n) {
  std::vector<std::int8_t> e(n * n, 0);
  for (int i = 0; i < n; ++i) e[i * n + i] = 1;
  return AsmMatrix(n, std::move(e));
}

namespace {

struct Enumerator {
  int n;
  std::vector<std::int8_t> entries;
  std::vector<std::int8_t> colsum;  // column partial sums, each in {0,1}
  const std::function<void(int, const std::vector<std::int8_t>&)>* emit;

  void fill_row(int i, int j, int rowsum) {
    if (j == n) {
      if (rowsum != 1) return;
      next_row(i + 1);
      return;
    }
    for (int v = -1; v <= 1; ++v) {
      int rs = rowsum + v;
      if (rs < 0 || rs > 1) continue;
      int cs = colsum[j] + v;
      if (cs < 0 || cs > 1) continue;
      entries[i * n + j] = static_cast<std::int8_t>(v);
      colsum[j] = static_cast<std::int8_t>(cs);
      fill_row(i, j + 1, rs);
      colsum[j] = static_cast<std::int8_t>(cs - v);
    }
  }

  void next_row(int i) {
    if (i == n) {
      for (int j = 0; j < n; ++j)
        if (colsum[j] != 1) return;
      (*emit)(n, entries);
      return;
    }
    fill_row(i, 0, 0);
  }
};

}  // namespace

void enumerate_asms(int n, const std::function<void(const AsmMatrix&)>& yield) {
  if (n < 1) throw std::invalid_argument("enumerate_asms: n must be >= 1");
  const std::function<void(int, const std::vector<std::int8_t>&)> emit =
      [&yield](int order, const std::vector<std::int8_t>& entries) {
        yield(AsmMatrix(order, entries));
      };
  Enumerator e{n, std::vector<std::int8_t>(n * n, 0), std::vector<std::int8_t>(n, 0), &emit};
  e.next_row(0);
}

std::vector<AsmMatrix> all_asms(int n) {
  std::vector<AsmMatrix> out;
  enumerate_asms(n, [&](const AsmMatrix& a) { out.push_back(a); });
  return out;
}

AsmStats asm_stats(const AsmMatrix& a) {
  const int n = a.n();
  AsmStats s;
  // nu: sum over i < i', j' <= j of A_{ij} A_{i'j'}
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j) == 0) continue;
      for (int i2 = i + 1; i2 < n; ++i2)
        for (int j2 = 0; j2 <= j; ++j2) s.nu += a.at(i, j) * a.at(i2, j2);
      if (a.at(i, j) == -1) ++s.mu;
    }
  for (int j = 0; j < n; ++j) {
    if (a.at(0, j) == 1) s.rho1 = j;
    if (a.at(n - 1, j) == 1) s.rho2 = n - 1 - j;
  }
  for (int i = 0; i < n; ++i) {
    if (a.at(i, 0) == 1) s.rho3 = i;
    if (a.at(i, n - 1) == 1) s.rho4 = n - 1 - i;
  }
  return s;
}

AsmMatrix asm_star(const AsmMatrix& a) {
  const int n = a.n();
  std::vector<std::int8_t> e(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[i * n + j] = static_cast<std::int8_t>(a.at(i, n - 1 - j));
  return AsmMatrix(n, std::move(e));
}

AsmMatrix asm_dagger(const AsmMatrix& a) {
  const int n = a.n();
  std::vector<std::int8_t> e(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e[i * n + j] = static_cast<std::int8_t>(a.at(n - 1 - i, n - 1 - j));
  return AsmMatrix(n, std::move(e));
}

std::string AsmMatrix::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  auto rows = nlohmann::json::array();
  for (int i = 0; i < n_; ++i) {
    auto row = nlohmann::json::array();
    for (int k = 0; k < n_; ++k) row.push_back(at(i, k));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

AsmMatrix AsmMatrix::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::vector<int>> rows;
  for (const auto& r : j.at("rows")) rows.push_back(r.get<std::vector<int>>());
  auto a = validate(rows);
  if (j.contains("n") && j.at("n").get<int>() != a.n())
    throw std::invalid_argument("asm json: n does not match rows");
  return a;
}

}  // namespace refine
