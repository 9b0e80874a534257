#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "schurtl/character.hpp"
#include "schurtl/horn.hpp"
#include "schurtl/polytope.hpp"
#include "schurtl/tl.hpp"

namespace schurtl {

struct WeightQuadruple {
  DominantWeight lambda{2, Partition{}};
  DominantWeight mu{2, Partition{}};
  DominantWeight nu{2, Partition{}};
  DominantWeight rho{2, Partition{}};
  int rank() const { return lambda.rank(); }
  auto operator<=>(const WeightQuadruple&) const = default;
};

struct PreconditionStatus {
  bool sum_matches = false;      // lambda + mu == nu + rho on representatives
  bool corners_contain = false;  // nu and rho lie in P_{lambda,mu}
  bool ok() const { return sum_matches && corners_contain; }
};

PreconditionStatus check_preconditions(const WeightQuadruple& q);

/// Support-containment data for chi_lambda chi_mu vs chi_nu chi_rho.
/// Precondition violations are flagged, never silently ignored; the products
/// and difference are computed regardless.
struct ContainmentReport {
  WeightQuadruple inputs;
  PreconditionStatus preconditions;
  CharacterVector product_lambda_mu;
  CharacterVector product_nu_rho;
  std::vector<Partition> missing;  // support(lambda*mu) minus support(nu*rho)
  CharacterVector difference;     // nu*rho - lambda*mu
  bool contained() const { return missing.empty(); }

  ContainmentReport() : product_lambda_mu(2), product_nu_rho(2), difference(2) {}
};

ContainmentReport support_containment_check(const DominantWeight& lambda,
                                            const DominantWeight& mu, const DominantWeight& nu,
                                            const DominantWeight& rho);

struct ChiNonnegReport {
  WeightQuadruple inputs;
  PreconditionStatus preconditions;
  CharacterVector difference;  // nu*rho - lambda*mu
  bool nonnegative = false;

  ChiNonnegReport() : difference(2) {}
};

ChiNonnegReport chi_nonnegativity_check(const DominantWeight& lambda, const DominantWeight& mu,
                                        const DominantWeight& nu, const DominantWeight& rho);

/// One row of the doubled Jacobi-Trudi arrangement: an element of I or J.
struct VRow {
  int value = 0;
  bool from_I = false;
  auto operator<=>(const VRow&) const = default;
};

/// Full record of one run of the constructive pairing algorithm.
///
/// The Temperley-Lieb diagram lives on [4r]; vertex y <= 2r is matrix column
/// y, vertex y > 2r is matrix row 4r+1-y. The color set has the even columns
/// and the J-origin rows black. Phase 1 pairs rows joined by row-row strands
/// of the chosen matching; phase 2 pairs the leftover I-rows and J-rows in
/// top-to-bottom order, with p/q recording their column partners.
struct PairingTrace {
  int n = 0;
  int r = 0;
  std::vector<VRow> v_rows;         // 2r entries, nonincreasing, I first on ties
  std::vector<Coeff> u_cols;        // (r, r, r-1, r-1, ..., 1, 1)
  std::vector<int> rows_I, rows_J;  // 1-based row indices of I / J origins
  ColorSet color_set;               // S on [4r]
  NonCrossingMatching chosen;       // matching whose immanant contains the target
  Partition target;                 // lambda(K)
  int phase1_count = 0;             // k
  std::vector<int> l_rows, m_rows;  // row index per pairing slot (size r)
  std::vector<int> p_cols, q_cols;  // column partners for slots k+1..r

  PairingTrace() : color_set(1, {}), chosen(NonCrossingMatching::identity(1)) {}

  int vertex_of_row(int row) const { return 4 * r + 1 - row; }
  int vertex_of_col(int col) const { return col; }
};

/// Structural invariants of the labeling phase: leftover rows alternate
/// J,I,J,I top to bottom at odd/even indices, their column partners q,p
/// interleave at odd/even indices, and consecutive slots are ordered.
bool trace_claim_holds(const PairingTrace& trace);

/// Color set after swapping the selected pairing slots: swapped rows exchange
/// colors; for phase-2 slots the whole column interval between the q and p
/// partners flips as well (the columns come in identical pairs, so this
/// preserves the minor product).
ColorSet recolored_color_set(const PairingTrace& trace, const std::vector<bool>& swap_mask);

/// Builds permutations (l_1..l_r) of I and (m_1..m_r) of J such that every
/// swap variant (I', J', K) stays inside T_r^n, by locating lambda(K) inside
/// a compatible Temperley-Lieb immanant of the doubled Jacobi-Trudi matrix
/// and reading the pairing off its diagram.
std::pair<Pairing, PairingTrace> construct_pairing(const Triple& t);

/// True iff every deduplicated swap variant (I', J') keeps (I', J', K) in T_r^n.
bool verify_pairing(const Triple& t, const Pairing& p);

struct SweepViolation {
  WeightQuadruple inputs;
  std::vector<Partition> missing;                          // containment failures
  std::vector<std::pair<Partition, Coeff>> negative_terms; // negative coefficients
  auto operator<=>(const SweepViolation&) const = default;
};

struct SweepReport {
  int n = 0;
  Coeff bound = 0;
  std::uint64_t pairs_examined = 0;
  std::uint64_t quadruples = 0;
  std::uint64_t max_support = 0;
  std::vector<SweepViolation> violations;
  std::int64_t elapsed_ms = 0;
};

/// Exhaustive support-containment scan: all dominant weight pairs with parts
/// <= bound, all complementary pairs inside the minimal polytope.
SweepReport sweep_theorem(int n, Coeff bound, int workers = 1);

/// Same scan checking coefficientwise nonnegativity of the difference.
SweepReport sweep_conjecture(int n, Coeff bound, int workers = 1);

/// Dominant weights of the given rank with parts <= bound, sorted.
std::vector<DominantWeight> dominant_weights_up_to(int n, Coeff bound);

}  // namespace schurtl
