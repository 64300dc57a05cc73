#include "assocform/lp.hpp"

#include "assocform/errors.hpp"

namespace assocform {

bool rational_lp_feasible(const Mat& A, const std::vector<Rat>& b) {
  const int m = A.rows();
  const int k = A.cols();
  if (static_cast<int>(b.size()) != m)
    throw StructuralError("structural_error", "right-hand side length mismatch");

  // Tableau over columns [theta_0..theta_{k-1} | s_0..s_{m-1} | rhs], with
  // artificial variables s as the starting basis. Rows are sign-fixed so that
  // rhs >= 0. Minimizing sum(s) to zero certifies feasibility.
  const int cols = k + m + 1;
  std::vector<std::vector<Rat>> tab(static_cast<std::size_t>(m),
                                    std::vector<Rat>(static_cast<std::size_t>(cols)));
  for (int r = 0; r < m; ++r) {
    const int flip = sgn(b[static_cast<std::size_t>(r)]) < 0 ? -1 : 1;
    for (int c = 0; c < k; ++c) tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = A.at(r, c) * flip;
    tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(k + r)] = 1;
    tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols - 1)] =
        b[static_cast<std::size_t>(r)] * flip;
  }
  std::vector<int> basis(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) basis[static_cast<std::size_t>(r)] = k + r;

  // Reduced cost row for minimizing the artificial sum; artificial columns
  // start in the basis with reduced cost 0.
  std::vector<Rat> cost(static_cast<std::size_t>(cols));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < cols; ++c)
      cost[static_cast<std::size_t>(c)] -= tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  for (int r = 0; r < m; ++r) cost[static_cast<std::size_t>(k + r)] += 1;

  while (true) {
    int entering = -1;
    for (int c = 0; c < k + m; ++c) {
      if (sgn(cost[static_cast<std::size_t>(c)]) < 0) {
        entering = c;  // Bland: smallest eligible index
        break;
      }
    }
    if (entering < 0) break;

    int leaving = -1;
    Rat best_ratio;
    for (int r = 0; r < m; ++r) {
      const Rat& pivot = tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(entering)];
      if (sgn(pivot) <= 0) continue;
      const Rat ratio =
          tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols - 1)] / pivot;
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio &&
           basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leaving)])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving < 0)
      throw std::logic_error("phase-one simplex is bounded below; no leaving row");

    auto& prow = tab[static_cast<std::size_t>(leaving)];
    const Rat pivot = prow[static_cast<std::size_t>(entering)];
    for (Rat& v : prow) v /= pivot;
    for (int r = 0; r < m; ++r) {
      if (r == leaving) continue;
      auto& row = tab[static_cast<std::size_t>(r)];
      const Rat factor = row[static_cast<std::size_t>(entering)];
      if (sgn(factor) == 0) continue;
      for (int c = 0; c < cols; ++c)
        row[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
    }
    const Rat factor = cost[static_cast<std::size_t>(entering)];
    if (sgn(factor) != 0)
      for (int c = 0; c < cols; ++c)
        cost[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
    basis[static_cast<std::size_t>(leaving)] = entering;
  }

  Rat objective = 0;
  for (int r = 0; r < m; ++r)
    if (basis[static_cast<std::size_t>(r)] >= k)
      objective += tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols - 1)];
  return sgn(objective) == 0;
}

}  // namespace assocform
