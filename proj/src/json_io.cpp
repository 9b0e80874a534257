#include "schurtl/json_io.hpp"

namespace schurtl {

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  return Partition(j.get<std::vector<Coeff>>());
}

Json to_json(const SchurVector& v) {
  Json out = Json::array();
  for (const auto& [p, c] : v.terms()) {
    Json term;
    term["partition"] = to_json(p);
    term["coeff"] = c;
    out.push_back(std::move(term));
  }
  return out;
}

SchurVector schur_vector_from_json(const Json& j) {
  SchurVector v;
  for (const auto& term : j) v.add_term(partition_from_json(term.at("partition")), term.at("coeff").get<Coeff>());
  return v;
}

Json to_json(const CharacterVector& v) {
  Json out = Json::array();
  for (const auto& [rep, c] : v.terms()) {
    Json term;
    Json coords = Json::array();
    for (int i = 1; i <= v.rank(); ++i) coords.push_back(rep.part(static_cast<std::size_t>(i)));
    term["partition"] = std::move(coords);
    term["coeff"] = c;
    out.push_back(std::move(term));
  }
  return out;
}

CharacterVector character_vector_from_json(const Json& j, int rank) {
  CharacterVector v(rank);
  for (const auto& term : j) {
    Partition rep = partition_from_json(term.at("partition"));
    v.add_term(DominantWeight(rank, std::move(rep)), term.at("coeff").get<Coeff>());
  }
  return v;
}

Json to_json(const NonCrossingMatching& m) {
  Json out;
  out["n"] = m.half_size();
  Json pairs = Json::array();
  for (auto [a, b] : m.pairs()) pairs.push_back(Json::array({a, b}));
  out["pairs"] = std::move(pairs);
  return out;
}

NonCrossingMatching matching_from_json(const Json& j) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& pr : j.at("pairs")) pairs.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
  return NonCrossingMatching::from_pairs(j.at("n").get<int>(), pairs);
}

Json to_json(const ColorSet& s) {
  Json out;
  out["n"] = s.half_size();
  out["members"] = Json(std::vector<int>(s.members().begin(), s.members().end()));
  return out;
}

Json to_json(const HPolynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json term;
    term["h"] = Json(m);
    term["coeff"] = c;
    out.push_back(std::move(term));
  }
  return out;
}

HPolynomial h_polynomial_from_json(const Json& j) {
  HPolynomial p;
  for (const auto& term : j)
    p.add_term(term.at("h").get<HMonomial>(), term.at("coeff").get<Coeff>());
  return p;
}

Json to_json(const SquareMatrix<HPolynomial>& X) {
  Json rows = Json::array();
  for (int i = 1; i <= X.n(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= X.n(); ++j) row.push_back(to_json(X.at(i, j)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["n"] = X.n();
  out["entries"] = std::move(rows);
  return out;
}

Json to_json(const SquareMatrix<CheckedInt>& X) {
  Json rows = Json::array();
  for (int i = 1; i <= X.n(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= X.n(); ++j) row.push_back(X.at(i, j).value);
    rows.push_back(std::move(row));
  }
  Json out;
  out["n"] = X.n();
  out["entries"] = std::move(rows);
  return out;
}

Json to_json(const Triple& t) {
  Json out;
  out["n"] = t.n;
  out["I"] = Json(t.I.elements());
  out["J"] = Json(t.J.elements());
  out["K"] = Json(t.K.elements());
  return out;
}

Triple triple_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  return Triple(n, SubsetOfN(n, j.at("I").get<std::vector<int>>()),
                SubsetOfN(n, j.at("J").get<std::vector<int>>()),
                SubsetOfN(n, j.at("K").get<std::vector<int>>()));
}

namespace {

Json weight_coords(const DominantWeight& w) {
  Json coords = Json::array();
  for (int i = 1; i <= w.rank(); ++i) coords.push_back(w.rep().part(static_cast<std::size_t>(i)));
  return coords;
}

DominantWeight weight_from_coords(const Json& j, int rank) {
  auto coords = j.get<std::vector<Coeff>>();
  return reduce_mod_ones(std::span<const Coeff>(coords), rank);
}

}  // namespace

Json to_json(const WeightQuadruple& q) {
  Json out;
  out["n"] = q.rank();
  out["lambda"] = weight_coords(q.lambda);
  out["mu"] = weight_coords(q.mu);
  out["nu"] = weight_coords(q.nu);
  out["rho"] = weight_coords(q.rho);
  return out;
}

WeightQuadruple weight_quadruple_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  return {weight_from_coords(j.at("lambda"), n), weight_from_coords(j.at("mu"), n),
          weight_from_coords(j.at("nu"), n), weight_from_coords(j.at("rho"), n)};
}

namespace {

Json preconditions_json(const PreconditionStatus& s) {
  Json out;
  out["sum_matches"] = s.sum_matches;
  out["corners_contain"] = s.corners_contain;
  return out;
}

}  // namespace

Json to_json(const ContainmentReport& r) {
  Json out;
  out["inputs"] = to_json(r.inputs);
  out["preconditions"] = preconditions_json(r.preconditions);
  out["product_lambda_mu"] = to_json(r.product_lambda_mu);
  out["product_nu_rho"] = to_json(r.product_nu_rho);
  Json missing = Json::array();
  for (const auto& rep : r.missing) {
    Json coords = Json::array();
    for (int i = 1; i <= r.inputs.rank(); ++i) coords.push_back(rep.part(static_cast<std::size_t>(i)));
    missing.push_back(std::move(coords));
  }
  out["missing"] = std::move(missing);
  out["difference"] = to_json(r.difference);
  out["contained"] = r.contained();
  return out;
}

ContainmentReport containment_report_from_json(const Json& j) {
  ContainmentReport r;
  r.inputs = weight_quadruple_from_json(j.at("inputs"));
  const int n = r.inputs.rank();
  r.preconditions.sum_matches = j.at("preconditions").at("sum_matches").get<bool>();
  r.preconditions.corners_contain = j.at("preconditions").at("corners_contain").get<bool>();
  r.product_lambda_mu = character_vector_from_json(j.at("product_lambda_mu"), n);
  r.product_nu_rho = character_vector_from_json(j.at("product_nu_rho"), n);
  for (const auto& coords : j.at("missing")) r.missing.push_back(partition_from_json(coords));
  r.difference = character_vector_from_json(j.at("difference"), n);
  return r;
}

Pairing pairing_from_json(const Json& j) {
  return Pairing{j.at("l").get<std::vector<int>>(), j.at("m").get<std::vector<int>>()};
}

SquareMatrix<HPolynomial> h_matrix_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  SquareMatrix<HPolynomial> X(n);
  const auto& rows = j.at("entries");
  for (int i = 1; i <= n; ++i)
    for (int col = 1; col <= n; ++col)
      X.at(i, col) = h_polynomial_from_json(rows.at(static_cast<std::size_t>(i) - 1)
                                                .at(static_cast<std::size_t>(col) - 1));
  return X;
}

Json to_json(const ChiNonnegReport& r) {
  Json out;
  out["inputs"] = to_json(r.inputs);
  out["preconditions"] = preconditions_json(r.preconditions);
  out["difference"] = to_json(r.difference);
  out["nonnegative"] = r.nonnegative;
  return out;
}

Json to_json(const Pairing& p) {
  Json out;
  out["l"] = Json(p.l);
  out["m"] = Json(p.m);
  return out;
}

Json to_json(const PairingTrace& t) {
  Json out;
  out["n"] = t.n;
  out["r"] = t.r;
  Json rows = Json::array();
  for (const VRow& row : t.v_rows) {
    Json entry;
    entry["value"] = row.value;
    entry["from_I"] = row.from_I;
    rows.push_back(std::move(entry));
  }
  out["v_rows"] = std::move(rows);
  out["u_cols"] = Json(t.u_cols);
  out["rows_I"] = Json(t.rows_I);
  out["rows_J"] = Json(t.rows_J);
  out["color_set"] = to_json(t.color_set);
  out["matching"] = to_json(t.chosen);
  out["target"] = to_json(t.target);
  out["phase1_count"] = t.phase1_count;
  out["l_rows"] = Json(t.l_rows);
  out["m_rows"] = Json(t.m_rows);
  out["p_cols"] = Json(t.p_cols);
  out["q_cols"] = Json(t.q_cols);
  std::vector<bool> all_swaps(static_cast<std::size_t>(t.r), true);
  out["recolored_all_swaps"] = to_json(recolored_color_set(t, all_swaps));
  return out;
}

Json to_json(const SweepReport& r) {
  Json out;
  out["n"] = r.n;
  out["bound"] = r.bound;
  out["pairs_examined"] = r.pairs_examined;
  out["quadruples"] = r.quadruples;
  out["max_support"] = r.max_support;
  Json violations = Json::array();
  for (const SweepViolation& v : r.violations) {
    Json item;
    item["inputs"] = to_json(v.inputs);
    Json missing = Json::array();
    for (const auto& rep : v.missing) {
      Json coords = Json::array();
      for (int i = 1; i <= v.inputs.rank(); ++i)
        coords.push_back(rep.part(static_cast<std::size_t>(i)));
      missing.push_back(std::move(coords));
    }
    item["missing"] = std::move(missing);
    Json negatives = Json::array();
    for (const auto& [rep, c] : v.negative_terms) {
      Json entry;
      Json coords = Json::array();
      for (int i = 1; i <= v.inputs.rank(); ++i)
        coords.push_back(rep.part(static_cast<std::size_t>(i)));
      entry["partition"] = std::move(coords);
      entry["coeff"] = c;
      negatives.push_back(std::move(entry));
    }
    item["negative_terms"] = std::move(negatives);
    violations.push_back(std::move(item));
  }
  out["violations"] = std::move(violations);
  out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

SweepReport sweep_report_from_json(const Json& j) {
  SweepReport r;
  r.n = j.at("n").get<int>();
  r.bound = j.at("bound").get<Coeff>();
  r.pairs_examined = j.at("pairs_examined").get<std::uint64_t>();
  r.quadruples = j.at("quadruples").get<std::uint64_t>();
  r.max_support = j.at("max_support").get<std::uint64_t>();
  for (const auto& item : j.at("violations")) {
    SweepViolation v;
    v.inputs = weight_quadruple_from_json(item.at("inputs"));
    for (const auto& coords : item.at("missing"))
      v.missing.push_back(partition_from_json(coords));
    for (const auto& entry : item.at("negative_terms"))
      v.negative_terms.emplace_back(partition_from_json(entry.at("partition")),
                                    entry.at("coeff").get<Coeff>());
    r.violations.push_back(std::move(v));
  }
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

}  // namespace schurtl
