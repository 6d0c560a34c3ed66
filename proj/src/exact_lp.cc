#include "nervekit/exact_lp.h"

#include <string>

#include "nervekit/errors.h"

namespace nervekit {

Rational make_rational(int64_t num, int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  Rational q{mpz_class(std::to_string(num)), mpz_class(std::to_string(den))};
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto is_integer = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!is_integer(num) || !is_integer(den) || den[0] == '-') {
    throw InputError("malformed rational '" + text + "'");
  }
  if (!den.empty() && den[0] == '+') den.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

class Tableau {
 public:
  // rows: [A | b]; basis holds the basic column of each row.
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<int> basis, int columns)
      : rows_(std::move(rows)), basis_(std::move(basis)), columns_(columns) {}

  // Minimizes cost·x over columns < `allowed`; returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, int allowed) {
    while (true) {
      // Bland: the lowest-index column with negative reduced cost enters.
      int enter = -1;
      for (int j = 0; j < allowed && enter < 0; ++j) {
        if (reduced_cost(cost, j) < 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
        const Rational& coef = rows_[i][enter];
        if (coef <= 0) continue;
        Rational ratio = rows_[i][columns_] / coef;
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational total = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < static_cast<int>(cost.size())) total += cost[basis_[i]] * rows_[i][columns_];
    }
    return total;
  }

  // Moves basic columns >= `limit` out of the basis; drops rows that cannot.
  void expel_columns_from(int limit) {
    for (int i = 0; i < static_cast<int>(rows_.size());) {
      if (basis_[i] < limit) {
        ++i;
        continue;
      }
      int enter = -1;
      for (int j = 0; j < limit && enter < 0; ++j) {
        if (rows_[i][j] != 0) enter = j;
      }
      if (enter >= 0) {
        pivot(i, enter);
        ++i;
      } else {
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
  }

  std::vector<Rational> solution(int count) const {
    std::vector<Rational> x(count);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < count) x[basis_[i]] = rows_[i][columns_];
    }
    return x;
  }

 private:
  Rational reduced_cost(const std::vector<Rational>& cost, int j) const {
    Rational r = j < static_cast<int>(cost.size()) ? cost[j] : Rational(0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const int bj = basis_[i];
      if (bj < static_cast<int>(cost.size()) && cost[bj] != 0 && rows_[i][j] != 0) {
        r -= cost[bj] * rows_[i][j];
      }
    }
    return r;
  }

  void pivot(int row, int col) {
    auto& p = rows_[row];
    const Rational inv = 1 / p[col];
    for (auto& v : p) v *= inv;
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      const Rational factor = rows_[i][col];
      for (int j = 0; j <= columns_; ++j) {
        if (p[j] != 0) rows_[i][j] -= factor * p[j];
      }
    }
    basis_[row] = col;
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
  int columns_;
};

}  // namespace

LpResult solve_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c) {
  const int m = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != m) throw InputError("constraint rows and rhs differ");
  const int n = m == 0 ? static_cast<int>(c.size()) : static_cast<int>(a[0].size());
  if (!c.empty() && static_cast<int>(c.size()) != n) throw InputError("cost has wrong length");

  // Phase 1 columns: n originals, then one artificial per row, then the rhs.
  const int columns = n + m;
  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(columns + 1));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(a[i].size()) != n) throw InputError("ragged constraint matrix");
    const int sign = b[i] < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) rows[i][j] = sign * a[i][j];
    rows[i][n + i] = 1;
    rows[i][columns] = sign * b[i];
    basis[i] = n + i;
  }
  Tableau t(std::move(rows), std::move(basis), columns);
  std::vector<Rational> phase1(columns);
  for (int i = 0; i < m; ++i) phase1[n + i] = 1;
  t.optimize(phase1, columns);

  LpResult result;
  if (t.objective(phase1) != 0) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  t.expel_columns_from(n);
  if (!c.empty() && !t.optimize(c, n)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.x = t.solution(n);
  if (!c.empty()) result.value = t.objective(c);
  return result;
}

}  // namespace nervekit
