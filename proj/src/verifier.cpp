#include "schurtl/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace schurtl {

PreconditionStatus check_preconditions(const WeightQuadruple& q) {
  const int n = q.rank();
  if (q.mu.rank() != n || q.nu.rank() != n || q.rho.rank() != n)
    throw std::invalid_argument("weight quadruple: rank mismatch");
  PreconditionStatus status;
  auto lv = q.lambda.coordinates(), mv = q.mu.coordinates(), nv = q.nu.coordinates(),
       rv = q.rho.coordinates();
  status.sum_matches = true;
  for (int i = 0; i < n; ++i)
    if (checked_add(lv[static_cast<std::size_t>(i)], mv[static_cast<std::size_t>(i)]) !=
        checked_add(nv[static_cast<std::size_t>(i)], rv[static_cast<std::size_t>(i)]))
      status.sum_matches = false;
  PolytopeSpec box{q.lambda, q.mu};
  status.corners_contain = in_minimal_alcoved(q.nu, box) && in_minimal_alcoved(q.rho, box);
  return status;
}

ContainmentReport support_containment_check(const DominantWeight& lambda,
                                            const DominantWeight& mu, const DominantWeight& nu,
                                            const DominantWeight& rho) {
  ContainmentReport report;
  report.inputs = {lambda, mu, nu, rho};
  report.preconditions = check_preconditions(report.inputs);
  report.product_lambda_mu = character_product(lambda, mu);
  report.product_nu_rho = character_product(nu, rho);
  report.difference = report.product_nu_rho - report.product_lambda_mu;
  for (const auto& [rep, c] : report.product_lambda_mu.terms())
    if (report.product_nu_rho.coefficient(DominantWeight(lambda.rank(), rep)) == 0)
      report.missing.push_back(rep);
  return report;
}

ChiNonnegReport chi_nonnegativity_check(const DominantWeight& lambda, const DominantWeight& mu,
                                        const DominantWeight& nu, const DominantWeight& rho) {
  ChiNonnegReport report;
  report.inputs = {lambda, mu, nu, rho};
  report.preconditions = check_preconditions(report.inputs);
  report.difference = character_product(nu, rho) - character_product(lambda, mu);
  report.nonnegative = report.difference.all_nonnegative();
  return report;
}

namespace {

// One-time consistency gate for everything the pairing constructor relies on:
// the complementary-minor decomposition identity, checked symbolically on a
// 4x4 matrix of free generators and on a deterministic integer matrix.
void ensure_decomposition_validated() {
  static std::once_flag flag;
  static bool ok = false;
  std::call_once(flag, [] {
    SquareMatrix<HPolynomial> X(4);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) X.at(i, j) = HPolynomial::h(10 * i + j);
    auto dec = minor_product_decomposition(X, SubsetOfN(4, {1, 2}), SubsetOfN(4, {1, 3}));
    if (!dec.identity_holds || dec.color_set.members() != std::set<int>{1, 3, 5, 6}) return;

    std::mt19937_64 rng(12345);
    SquareMatrix<CheckedInt> A(3);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) A.at(i, j) = CheckedInt{static_cast<Coeff>(rng() % 7) - 3};
    std::vector<std::vector<int>> subsets{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    for (const auto& I : subsets)
      for (const auto& J : subsets) {
        if (I.size() != J.size()) continue;
        if (!minor_product_decomposition(A, SubsetOfN(3, I), SubsetOfN(3, J)).identity_holds)
          return;
      }
    ok = true;
  });
  if (!ok) throw InternalError("complementary-minor decomposition self-test failed");
}

}  // namespace

std::pair<Pairing, PairingTrace> construct_pairing(const Triple& t) {
  if (!triple_in_T(t)) throw std::invalid_argument("construct_pairing: triple not in T_r^n");
  ensure_decomposition_validated();

  const int r = t.r();
  PairingTrace trace;
  trace.n = t.n;
  trace.r = r;

  for (int x : t.I.elements()) trace.v_rows.push_back({x, true});
  for (int x : t.J.elements()) trace.v_rows.push_back({x, false});
  std::sort(trace.v_rows.begin(), trace.v_rows.end(), [](const VRow& a, const VRow& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.from_I && !b.from_I;  // ties: the I-origin element comes first
  });
  for (int c = r; c >= 1; --c) {
    trace.u_cols.push_back(c);
    trace.u_cols.push_back(c);
  }
  for (int row = 1; row <= 2 * r; ++row) {
    if (trace.v_rows[static_cast<std::size_t>(row) - 1].from_I)
      trace.rows_I.push_back(row);
    else
      trace.rows_J.push_back(row);
  }

  SquareMatrix<HPolynomial> X(2 * r);
  for (int i = 1; i <= 2 * r; ++i)
    for (int j = 1; j <= 2 * r; ++j)
      X.at(i, j) = HPolynomial::h(trace.v_rows[static_cast<std::size_t>(i) - 1].value -
                                  trace.u_cols[static_cast<std::size_t>(j) - 1]);

  std::vector<int> even_cols;
  for (int c = 2; c <= 2 * r; c += 2) even_cols.push_back(c);
  auto dec = minor_product_decomposition(X, SubsetOfN(2 * r, trace.rows_I),
                                         SubsetOfN(2 * r, even_cols));
  if (!dec.identity_holds)
    throw InternalError("construct_pairing: minor decomposition identity failed");
  trace.color_set = dec.color_set;
  trace.target = partition_from_subset(t.K);

  bool found = false;
  for (const auto& [m, imm] : dec.immanants) {
    if (h_poly_to_schur(imm).coefficient(trace.target) > 0) {
      trace.chosen = m;
      found = true;
      break;
    }
  }
  if (!found)
    throw InternalError("construct_pairing: no compatible immanant contains the target");

  // Partner tables by row: a row is matched either to another row (phase 1)
  // or to a column (phase 2).
  std::vector<int> partner_row(static_cast<std::size_t>(2 * r) + 1, 0);
  std::vector<int> partner_col(static_cast<std::size_t>(2 * r) + 1, 0);
  for (int row = 1; row <= 2 * r; ++row) {
    int y = trace.chosen.partner(trace.vertex_of_row(row));
    if (y > 2 * r)
      partner_row[static_cast<std::size_t>(row)] = 4 * r + 1 - y;
    else
      partner_col[static_cast<std::size_t>(row)] = y;
  }

  Pairing pairing;
  auto value_at = [&](int row) { return trace.v_rows[static_cast<std::size_t>(row) - 1].value; };
  auto from_I_at = [&](int row) { return trace.v_rows[static_cast<std::size_t>(row) - 1].from_I; };

  for (int row = 1; row <= 2 * r; ++row) {
    if (!from_I_at(row) || partner_row[static_cast<std::size_t>(row)] == 0) continue;
    int other = partner_row[static_cast<std::size_t>(row)];
    if (from_I_at(other))
      throw InternalError("construct_pairing: row-row strand joins two I rows");
    pairing.l.push_back(value_at(row));
    pairing.m.push_back(value_at(other));
    trace.l_rows.push_back(row);
    trace.m_rows.push_back(other);
  }
  trace.phase1_count = static_cast<int>(pairing.l.size());

  for (int row = 1; row <= 2 * r; ++row) {
    if (partner_row[static_cast<std::size_t>(row)] != 0) continue;
    int col = partner_col[static_cast<std::size_t>(row)];
    if (col == 0) throw InternalError("construct_pairing: unmatched row");
    if (from_I_at(row)) {
      pairing.l.push_back(value_at(row));
      trace.l_rows.push_back(row);
      trace.p_cols.push_back(col);
    } else {
      pairing.m.push_back(value_at(row));
      trace.m_rows.push_back(row);
      trace.q_cols.push_back(col);
    }
  }
  if (pairing.l.size() != static_cast<std::size_t>(r) ||
      pairing.m.size() != static_cast<std::size_t>(r))
    throw InternalError("construct_pairing: pairing is not a full alignment of I and J");

  return {std::move(pairing), std::move(trace)};
}

bool trace_claim_holds(const PairingTrace& trace) {
  const int r = trace.r;
  const int k = trace.phase1_count;
  if (static_cast<int>(trace.l_rows.size()) != r) return false;
  if (static_cast<int>(trace.m_rows.size()) != r) return false;
  if (static_cast<int>(trace.p_cols.size()) != r - k) return false;
  if (static_cast<int>(trace.q_cols.size()) != r - k) return false;

  if (!is_compatible(trace.chosen, trace.color_set)) return false;

  for (int f = 0; f < r - k; ++f) {
    int l_row = trace.l_rows[static_cast<std::size_t>(k + f)];
    int m_row = trace.m_rows[static_cast<std::size_t>(k + f)];
    int p_col = trace.p_cols[static_cast<std::size_t>(f)];
    int q_col = trace.q_cols[static_cast<std::size_t>(f)];
    // Leftover rows pair J-above-I; their column partners pair q-before-p.
    if (!(m_row < l_row)) return false;
    if (!(q_col < p_col)) return false;
    // Alternation parities: positions run J(odd), I(even) down the rows and
    // q(odd), p(even) along the columns.
    if (m_row % 2 != 1 || l_row % 2 != 0) return false;
    if (q_col % 2 != 1 || p_col % 2 != 0) return false;
    if (f + 1 < r - k) {
      if (!(l_row < trace.m_rows[static_cast<std::size_t>(k + f + 1)])) return false;
      if (!(p_col < trace.q_cols[static_cast<std::size_t>(f + 1)])) return false;
    }
  }
  return true;
}

ColorSet recolored_color_set(const PairingTrace& trace, const std::vector<bool>& swap_mask) {
  if (static_cast<int>(swap_mask.size()) != trace.r)
    throw std::invalid_argument("recoloring mask must have one entry per pairing slot");
  std::set<int> members = trace.color_set.members();
  auto toggle = [&](int v) {
    if (members.contains(v))
      members.erase(v);
    else
      members.insert(v);
  };
  const int k = trace.phase1_count;
  for (int slot = 0; slot < trace.r; ++slot) {
    if (!swap_mask[static_cast<std::size_t>(slot)]) continue;
    toggle(trace.vertex_of_row(trace.l_rows[static_cast<std::size_t>(slot)]));
    toggle(trace.vertex_of_row(trace.m_rows[static_cast<std::size_t>(slot)]));
    if (slot >= k) {
      int a = trace.q_cols[static_cast<std::size_t>(slot - k)];
      int b = trace.p_cols[static_cast<std::size_t>(slot - k)];
      for (int col = std::min(a, b); col <= std::max(a, b); ++col)
        toggle(trace.vertex_of_col(col));
    }
  }
  return ColorSet(trace.color_set.half_size(), std::move(members));
}

bool verify_pairing(const Triple& t, const Pairing& p) {
  const int r = t.r();
  if (p.r() != r) return false;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> left, right;
    for (int pos = 0; pos < r; ++pos) {
      bool swapped = (mask >> pos) & 1;
      left.push_back(swapped ? p.m[static_cast<std::size_t>(pos)]
                             : p.l[static_cast<std::size_t>(pos)]);
      right.push_back(swapped ? p.l[static_cast<std::size_t>(pos)]
                              : p.m[static_cast<std::size_t>(pos)]);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    // A swap that collapses a side to a multiset cannot index a triple.
    if (std::adjacent_find(left.begin(), left.end()) != left.end()) return false;
    if (std::adjacent_find(right.begin(), right.end()) != right.end()) return false;
    if (!seen.insert({left, right}).second) continue;
    if (!triple_in_T(Triple(t.n, SubsetOfN(t.n, left), SubsetOfN(t.n, right), t.K)))
      return false;
  }
  return true;
}

std::vector<DominantWeight> dominant_weights_up_to(int n, Coeff bound) {
  std::vector<DominantWeight> out;
  std::vector<Coeff> parts;
  auto rec = [&](auto&& self) -> void {
    out.push_back(DominantWeight(n, Partition(parts)));
    if (static_cast<int>(parts.size()) == n - 1) return;
    Coeff hi = parts.empty() ? bound : parts.back();
    for (Coeff next = 1; next <= hi; ++next) {
      parts.push_back(next);
      self(self);
      parts.pop_back();
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct SweepTask {
  DominantWeight lambda, mu;
};

SweepReport run_sweep(int n, Coeff bound, int workers, bool check_nonnegativity) {
  if (n < 2) throw std::invalid_argument("sweep needs n >= 2");
  if (workers < 1) workers = 1;
  auto start = std::chrono::steady_clock::now();

  SweepReport report;
  report.n = n;
  report.bound = bound;
  if (bound < 1) return report;

  auto weights = dominant_weights_up_to(n, bound);
  std::vector<SweepTask> tasks;
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (std::size_t j = i; j < weights.size(); ++j) tasks.push_back({weights[i], weights[j]});

  std::vector<SweepReport> partial(static_cast<std::size_t>(workers));
  auto work = [&](int worker_id) {
    SweepReport& local = partial[static_cast<std::size_t>(worker_id)];
    for (std::size_t idx = static_cast<std::size_t>(worker_id); idx < tasks.size();
         idx += static_cast<std::size_t>(workers)) {
      const auto& [lambda, mu] = tasks[idx];
      ++local.pairs_examined;
      auto pairs = enumerate_complementary_pairs(PolytopeSpec{lambda, mu});
      for (const auto& [nu, rho] : pairs) {
        if (rho < nu) continue;  // quadruples are canonicalized unordered
        ++local.quadruples;
        if (check_nonnegativity) {
          auto check = chi_nonnegativity_check(lambda, mu, nu, rho);
          if (!check.preconditions.ok())
            throw InternalError("sweep generated a quadruple violating its own preconditions");
          local.max_support = std::max<std::uint64_t>(local.max_support,
                                                      check.difference.terms().size());
          if (!check.nonnegative) {
            SweepViolation v;
            v.inputs = check.inputs;
            for (const auto& [rep, c] : check.difference.terms())
              if (c < 0) v.negative_terms.emplace_back(rep, c);
            local.violations.push_back(std::move(v));
          }
        } else {
          auto check = support_containment_check(lambda, mu, nu, rho);
          if (!check.preconditions.ok())
            throw InternalError("sweep generated a quadruple violating its own preconditions");
          local.max_support =
              std::max<std::uint64_t>(local.max_support, check.product_lambda_mu.terms().size());
          local.max_support =
              std::max<std::uint64_t>(local.max_support, check.product_nu_rho.terms().size());
          if (!check.contained()) {
            SweepViolation v;
            v.inputs = check.inputs;
            v.missing = check.missing;
            local.violations.push_back(std::move(v));
          }
        }
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  for (const auto& local : partial) {
    report.pairs_examined += local.pairs_examined;
    report.quadruples += local.quadruples;
    report.max_support = std::max(report.max_support, local.max_support);
    report.violations.insert(report.violations.end(), local.violations.begin(),
                             local.violations.end());
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace

SweepReport sweep_theorem(int n, Coeff bound, int workers) {
  return run_sweep(n, bound, workers, false);
}

SweepReport sweep_conjecture(int n, Coeff bound, int workers) {
  return run_sweep(n, bound, workers, true);
}

}  // namespace schurtl
