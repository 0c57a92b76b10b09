#include "jacnewton/lp.hpp"

#include <optional>
#include <stdexcept>

namespace jacnewton::lp {
namespace {

class Tableau {
 public:
  // rows_[i] has columns_ + 1 entries; the last is the right-hand side.
  std::vector<RatVec> rows;
  std::vector<std::size_t> basis;
  RatVec cost;  // reduced costs, cost.back() = -objective value
  std::size_t columns = 0;

  void pivot(std::size_t r, std::size_t c) {
    const Rat p = rows[r][c];
    for (auto& x : rows[r]) x /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rat f = rows[i][c];
      for (std::size_t j = 0; j <= columns; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (cost[c] != 0) {
      const Rat f = cost[c];
      for (std::size_t j = 0; j <= columns; ++j) cost[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  void price(const RatVec& c) {
    cost.assign(columns + 1, Rat(0));
    for (std::size_t j = 0; j < c.size(); ++j) cost[j] = c[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rat cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= columns; ++j) cost[j] -= cb * rows[i][j];
    }
  }

  // Bland's rule; returns false when unbounded.
  bool run(std::size_t allowed_columns) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed_columns; ++j)
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rat best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][*enter] <= 0) continue;
        const Rat ratio = rows[i][columns] / rows[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

Solution minimize(const Problem& problem) {
  const std::size_t n = problem.objective.size();
  const std::size_t m = problem.constraints.size();
  for (const auto& c : problem.constraints)
    if (c.coeffs.size() != n) throw std::invalid_argument("lp: constraint width differs from objective");

  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  std::vector<Relation> rel(m);
  std::vector<bool> flip(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    rel[i] = problem.constraints[i].relation;
    if (problem.constraints[i].rhs < 0) {
      flip[i] = true;
      if (rel[i] == Relation::less_equal) rel[i] = Relation::greater_equal;
      else if (rel[i] == Relation::greater_equal) rel[i] = Relation::less_equal;
    }
    if (rel[i] != Relation::equal) ++slack_count;
    if (rel[i] != Relation::less_equal) ++artificial_count;
  }

  Tableau t;
  t.columns = n + slack_count + artificial_count;
  const std::size_t first_artificial = n + slack_count;
  t.rows.assign(m, RatVec(t.columns + 1, Rat(0)));
  t.basis.assign(m, 0);
  std::size_t next_slack = n;
  std::size_t next_art = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    const Rat sign = flip[i] ? Rat(-1) : Rat(1);
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = sign * problem.constraints[i].coeffs[j];
    t.rows[i][t.columns] = sign * problem.constraints[i].rhs;
    if (rel[i] == Relation::less_equal) {
      t.rows[i][next_slack] = 1;
      t.basis[i] = next_slack++;
    } else {
      if (rel[i] == Relation::greater_equal) t.rows[i][next_slack++] = -1;
      t.rows[i][next_art] = 1;
      t.basis[i] = next_art++;
    }
  }

  Solution sol;
  if (artificial_count > 0) {
    RatVec phase1(t.columns, Rat(0));
    for (std::size_t j = first_artificial; j < t.columns; ++j) phase1[j] = 1;
    t.price(phase1);
    t.run(t.columns);
    if (-t.cost[t.columns] != 0) return sol;  // infeasible
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_artificial) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_artificial; ++j)
        if (t.rows[i][j] != 0) {
          col = j;
          break;
        }
      if (col) {
        t.pivot(i, *col);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  RatVec phase2(t.columns, Rat(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = problem.objective[j];
  t.price(phase2);
  if (!t.run(first_artificial)) {
    sol.status = Status::unbounded;
    return sol;
  }
  sol.status = Status::optimal;
  sol.value = -t.cost[t.columns];
  sol.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) sol.x[t.basis[i]] = t.rows[i][t.columns];
  return sol;
}

}  // namespace jacnewton::lp
