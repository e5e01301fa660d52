#include "coevo/selectors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coevo/errors.hpp"

namespace coevo {

PriorConfig prior_from_exponents(int beta0_exp, int alpha_xy_exp) {
  return PriorConfig{std::pow(10.0, beta0_exp), std::pow(10.0, alpha_xy_exp)};
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw NonPositiveParameterError("Beta parameters must be strictly positive");
  }
  double lo = std::min(a, b);
  double hi = std::max(a, b);
  // For integer lo the Gamma ratio collapses to a rising factorial:
  //   log B(lo, hi) = log Gamma(lo) - sum_{i=0}^{lo-1} log(hi + i).
  // This avoids the cancellation of lgamma(hi) - lgamma(lo + hi), which at
  // hi ~ 1e9 loses six digits of absolute precision.
  if (lo <= 65536.0 && lo == std::floor(lo)) {
    const long n = static_cast<long>(lo);
    double sum = 0.0, comp = 0.0;
    for (long i = 0; i < n; ++i) {
      const double term = std::log(hi + static_cast<double>(i)) - comp;
      const double next = sum + term;
      comp = (next - sum) - term;
      sum = next;
    }
    return std::lgamma(lo) - sum;
  }
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

namespace {

struct QuadrantPriors {
  double a, b;
};

// Prior placement: quadrant 1 carries the hard-consistency Beta(1,1);
// quadrant 0 expects incorrect-incorrect passes to be rare (Beta(1, beta0));
// the cross quadrants tolerate passes in proportion to alpha_xy.
std::array<QuadrantPriors, 4> quadrant_priors(const PriorConfig& prior) {
  return {QuadrantPriors{1.0, 1.0},
          QuadrantPriors{1.0, prior.beta0},
          QuadrantPriors{prior.alpha_xy, 1.0},
          QuadrantPriors{prior.alpha_xy, 1.0}};
}

// The four per-quadrant terms are summed in sorted order so that candidates
// with identical term multisets produce bit-identical scores and fall through
// to the deterministic tie-break.
double sum_sorted(std::array<double, 4> terms) {
  std::sort(terms.begin(), terms.end());
  return terms[0] + terms[1] + terms[2] + terms[3];
}

}  // namespace

double b4_log_score(const QuadrantCounts& counts, const PriorConfig& prior) {
  if (!(prior.beta0 > 0.0) || !(prior.alpha_xy > 0.0)) {
    throw NonPositiveParameterError("prior hyperparameters must be strictly positive");
  }
  const auto priors = quadrant_priors(prior);
  std::array<double, 4> terms{};
  for (int k = 0; k < 4; ++k) {
    terms[static_cast<std::size_t>(k)] =
        log_beta(priors[static_cast<std::size_t>(k)].a + static_cast<double>(counts.passes[static_cast<std::size_t>(k)]),
                 priors[static_cast<std::size_t>(k)].b + static_cast<double>(counts.fails[static_cast<std::size_t>(k)]));
  }
  return sum_sorted(terms);
}

ConsensusSelection select_maxpass(const PassingMatrix& matrix) {
  const int n = matrix.rows();
  const int m = matrix.cols();
  int best = -1;
  std::vector<int> sums(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    sums[static_cast<std::size_t>(i)] = matrix.row_sum(i);
    best = std::max(best, sums[static_cast<std::size_t>(i)]);
  }
  ConsensusSelection sel;
  sel.selector_name = "maxpass";
  sel.score = static_cast<double>(best);
  for (int i = 0; i < n; ++i) {
    if (sums[static_cast<std::size_t>(i)] == best) sel.solution_indices.push_back(i);
  }
  for (int j = 0; j < m; ++j) {
    bool all = true;
    for (int i : sel.solution_indices) {
      if (!matrix.entry(i, j)) {
        all = false;
        break;
      }
    }
    if (all) sel.test_indices.push_back(j);
  }
  return sel;
}

namespace {

std::vector<int> common_columns(const RowSignature& sig) {
  std::vector<int> cols;
  for (int j = 0; j < static_cast<int>(sig.bits.size()); ++j) {
    if (sig.bits[static_cast<std::size_t>(j)]) cols.push_back(j);
  }
  return cols;
}

// score desc, then group size desc, then first member asc. Groups arrive in
// first-member order, so strict improvement implements the last clause.
bool improves(double score, std::size_t size, double best_score, std::size_t best_size) {
  if (score != best_score) return score > best_score;
  return size > best_size;
}

}  // namespace

ConsensusSelection select_codet(const PassingMatrix& matrix) {
  const auto groups = signatures(matrix);
  ConsensusSelection sel;
  sel.selector_name = "codet";
  double best_score = -1.0;
  std::size_t best_size = 0;
  for (const auto& g : groups) {
    const auto cols = common_columns(g);
    const double score =
        static_cast<double>(g.member_indices.size()) * static_cast<double>(cols.size());
    if (improves(score, g.member_indices.size(), best_score, best_size)) {
      best_score = score;
      best_size = g.member_indices.size();
      sel.solution_indices = g.member_indices;
      sel.test_indices = cols;
      sel.score = score;
    }
  }
  return sel;
}

namespace {

QuadrantCounts candidate_counts(const PassingMatrix& matrix, const std::vector<int>& group,
                                const std::vector<int>& cols) {
  const int n = matrix.rows();
  const int m = matrix.cols();
  std::vector<char> in_group(static_cast<std::size_t>(n), 0);
  std::vector<char> in_cols(static_cast<std::size_t>(m), 0);
  for (int i : group) in_group[static_cast<std::size_t>(i)] = 1;
  for (int j : cols) in_cols[static_cast<std::size_t>(j)] = 1;
  QuadrantCounts counts;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      int quadrant;
      if (in_group[static_cast<std::size_t>(i)]) {
        quadrant = in_cols[static_cast<std::size_t>(j)] ? QuadrantCounts::kOne : QuadrantCounts::kX;
      } else {
        quadrant = in_cols[static_cast<std::size_t>(j)] ? QuadrantCounts::kY : QuadrantCounts::kZero;
      }
      if (matrix.entry(i, j)) {
        ++counts.passes[static_cast<std::size_t>(quadrant)];
      } else {
        ++counts.fails[static_cast<std::size_t>(quadrant)];
      }
    }
  }
  return counts;
}

}  // namespace

ConsensusSelection select_b4(const PassingMatrix& matrix, const PriorConfig& prior) {
  const auto groups = signatures(matrix);
  bool any_columns = false;
  for (const auto& g : groups) {
    if (std::find(g.bits.begin(), g.bits.end(), std::uint8_t{1}) != g.bits.end()) {
      any_columns = true;
      break;
    }
  }

  ConsensusSelection sel;
  sel.selector_name = "b4";
  if (!any_columns) {
    // No candidate can claim a consistent test column; fall back to the
    // CodeT ordering and report that candidate's Bayesian score.
    const auto codet = select_codet(matrix);
    sel.solution_indices = codet.solution_indices;
    sel.test_indices = codet.test_indices;
    sel.score = b4_log_score(candidate_counts(matrix, sel.solution_indices, sel.test_indices),
                             prior);
    return sel;
  }

  bool have_best = false;
  double best_score = 0.0;
  std::size_t best_size = 0;
  for (const auto& g : groups) {
    const auto cols = common_columns(g);
    const double score = b4_log_score(candidate_counts(matrix, g.member_indices, cols), prior);
    if (!have_best || improves(score, g.member_indices.size(), best_score, best_size)) {
      have_best = true;
      best_score = score;
      best_size = g.member_indices.size();
      sel.solution_indices = g.member_indices;
      sel.test_indices = cols;
      sel.score = score;
    }
  }
  return sel;
}

// ---------------------------------------------------------------------------
// Brute-force oracle. Re-derives groups, labelings, counts and Beta terms
// with plain loops and no shared helpers, so that agreement with select_b4
// actually checks something.
// ---------------------------------------------------------------------------

namespace {

double brute_log_beta(double a, double b) {
  if (a <= 0.0 || b <= 0.0) {
    throw NonPositiveParameterError("Beta parameters must be strictly positive");
  }
  const double lo = a < b ? a : b;
  const double hi = a < b ? b : a;
  if (lo == std::floor(lo) && lo <= 65536.0) {
    double acc = 0.0, carry = 0.0;
    for (double i = 0.0; i < lo; i += 1.0) {
      const double y = std::log(hi + i) - carry;
      const double t = acc + y;
      carry = (t - acc) - y;
      acc = t;
    }
    return std::lgamma(lo) - acc;
  }
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

}  // namespace

ConsensusSelection select_b4_bruteforce(const PassingMatrix& matrix, const PriorConfig& prior) {
  const int n = matrix.rows();
  const int m = matrix.cols();
  if (n > 8 || m > 8) {
    throw SizeLimitError("brute-force selector is limited to 8x8 matrices");
  }
  if (!(prior.beta0 > 0.0) || !(prior.alpha_xy > 0.0)) {
    throw NonPositiveParameterError("prior hyperparameters must be strictly positive");
  }

  // Candidate per distinct row pattern, in first-occurrence order.
  std::vector<std::vector<int>> candidates;
  std::vector<char> claimed(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (claimed[static_cast<std::size_t>(i)]) continue;
    std::vector<int> members{i};
    claimed[static_cast<std::size_t>(i)] = 1;
    for (int k = i + 1; k < n; ++k) {
      if (claimed[static_cast<std::size_t>(k)]) continue;
      bool same = true;
      for (int j = 0; j < m; ++j) {
        if (matrix.entry(i, j) != matrix.entry(k, j)) {
          same = false;
          break;
        }
      }
      if (same) {
        members.push_back(k);
        claimed[static_cast<std::size_t>(k)] = 1;
      }
    }
    candidates.push_back(std::move(members));
  }

  struct Scored {
    std::vector<int> members;
    std::vector<int> cols;
    double score;
  };
  std::vector<Scored> scored;
  bool all_empty = true;
  for (const auto& members : candidates) {
    std::vector<int> cols;
    for (int j = 0; j < m; ++j) {
      bool all = true;
      for (int i : members) {
        if (!matrix.entry(i, j)) {
          all = false;
          break;
        }
      }
      if (all) cols.push_back(j);
    }
    if (!cols.empty()) all_empty = false;

    long p1 = 0, f1 = 0, p0 = 0, f0 = 0, px = 0, fx = 0, py = 0, fy = 0;
    for (int i = 0; i < n; ++i) {
      const bool row_sel = std::find(members.begin(), members.end(), i) != members.end();
      for (int j = 0; j < m; ++j) {
        const bool col_sel = std::find(cols.begin(), cols.end(), j) != cols.end();
        const bool pass = matrix.entry(i, j);
        if (row_sel && col_sel) {
          pass ? ++p1 : ++f1;
        } else if (row_sel) {
          pass ? ++px : ++fx;
        } else if (col_sel) {
          pass ? ++py : ++fy;
        } else {
          pass ? ++p0 : ++f0;
        }
      }
    }
    std::array<double, 4> terms{
        brute_log_beta(1.0 + static_cast<double>(p1), 1.0 + static_cast<double>(f1)),
        brute_log_beta(1.0 + static_cast<double>(p0), prior.beta0 + static_cast<double>(f0)),
        brute_log_beta(prior.alpha_xy + static_cast<double>(px), 1.0 + static_cast<double>(fx)),
        brute_log_beta(prior.alpha_xy + static_cast<double>(py), 1.0 + static_cast<double>(fy))};
    std::sort(terms.begin(), terms.end());
    scored.push_back(Scored{members, cols, terms[0] + terms[1] + terms[2] + terms[3]});
  }

  ConsensusSelection sel;
  sel.selector_name = "b4";
  if (all_empty) {
    // CodeT ordering: with every common-column set empty all products are
    // zero, so the largest, earliest group wins.
    std::size_t best = 0;
    for (std::size_t c = 1; c < scored.size(); ++c) {
      if (scored[c].members.size() > scored[best].members.size()) best = c;
    }
    sel.solution_indices = scored[best].members;
    sel.test_indices = scored[best].cols;
    sel.score = scored[best].score;
    return sel;
  }

  std::size_t best = 0;
  for (std::size_t c = 1; c < scored.size(); ++c) {
    const bool better =
        scored[c].score > scored[best].score ||
        (scored[c].score == scored[best].score &&
         scored[c].members.size() > scored[best].members.size());
    if (better) best = c;
  }
  sel.solution_indices = scored[best].members;
  sel.test_indices = scored[best].cols;
  sel.score = scored[best].score;
  return sel;
}

}  // namespace coevo
