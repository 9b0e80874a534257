#include "schurtl/cli.hpp"

#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "schurtl/json_io.hpp"
#include "schurtl/memo.hpp"
#include "schurtl/verifier.hpp"

namespace schurtl::cli {

namespace {

DominantWeight parse_weight(const std::string& text, int n) {
  Partition p = Partition::parse(text);
  return reduce_mod_ones(p, n);
}

SubsetOfN parse_subset(const std::string& text, int n) {
  std::vector<int> elems;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    elems.push_back(std::stoi(tok));
  return SubsetOfN(n, elems);
}

std::vector<Coeff> parse_sequence(const std::string& text) {
  std::vector<Coeff> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

SquareMatrix<CheckedInt> seeded_matrix(int n, std::uint64_t seed, Coeff lo = -3, Coeff hi = 3) {
  std::mt19937_64 rng(seed);
  SquareMatrix<CheckedInt> X(n);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      X.at(i, j) = CheckedInt{lo + static_cast<Coeff>(rng() % span)};
  return X;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

struct CommonFlags {
  bool json = false;
  std::uint64_t seed = 0;
  int workers = 1;
  bool timing = false;
  std::size_t memo_cap = 0;
  bool memo_cap_set = false;
};

// Deterministic small self-test battery; returns failure strings, empty = ok.
std::vector<std::string> run_self_test(std::uint64_t seed) {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i) {
      TLElement ti = TLElement::generator_t(i, n);
      expect(ti * ti == ti.times(2), "TL relation t_i^2 = 2 t_i");
      for (int j = 1; j < n; ++j) {
        TLElement tj = TLElement::generator_t(j, n);
        if (std::abs(i - j) == 1) expect(ti * tj * ti == ti, "TL relation t_i t_j t_i = t_i");
        if (std::abs(i - j) >= 2) expect(ti * tj == tj * ti, "TL commutation");
      }
    }

  {
    SquareMatrix<HPolynomial> X(4);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) X.at(i, j) = HPolynomial::h(10 * i + j);
    auto dec = minor_product_decomposition(X, SubsetOfN(4, {1, 2}), SubsetOfN(4, {1, 3}));
    expect(dec.color_set.members() == std::set<int>{1, 3, 5, 6},
           "decomposition color set {1,3,5,6}");
    expect(dec.identity_holds, "symbolic complementary-minor identity");
  }

  for (int n = 2; n <= 3; ++n) {
    auto X = seeded_matrix(n, seed + static_cast<std::uint64_t>(n));
    expect(tl_immanant(NonCrossingMatching::identity(n), X).value == determinant(X).value,
           "identity immanant equals determinant");
    for (int r = 1; r <= n; ++r) {
      std::vector<int> head;
      for (int x = 1; x <= r; ++x) head.push_back(x);
      auto dec = minor_product_decomposition(X, SubsetOfN(n, head), SubsetOfN(n, head));
      expect(dec.identity_holds, "integer complementary-minor identity");
    }
  }

  {
    auto X = generalized_jacobi_trudi({4, 3, 3, 2}, {3, 2, 1, 0});
    expect(X.at(2, 1) == HPolynomial::one() && X.at(4, 1).is_zero(),
           "jacobi-trudi worked matrix entries");
    expect(h_poly_to_schur(HPolynomial::h(2) * HPolynomial::h(1) - HPolynomial::h(3)) ==
               SchurVector::basis(Partition({2, 1})),
           "h2 h1 - h3 = s(2,1)");
  }

  {
    auto report = support_containment_check(
        parse_weight("12,7,0", 3), parse_weight("4,2,0", 3), parse_weight("5,2,0", 3),
        parse_weight("11,7,0", 3));
    expect(report.preconditions.ok() && report.contained() &&
               report.difference.terms().size() == 14,
           "worked example containment report");
  }

  for (const Triple& t : enumerate_triples(1, 3)) {
    auto [pairing, trace] = construct_pairing(t);
    expect(verify_pairing(t, pairing) && trace_claim_holds(trace), "rank-1 pairing construction");
  }
  return failures;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Littlewood-Richardson / Temperley-Lieb toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonFlags flags;
  app.add_flag("--json", flags.json, "emit JSON instead of text");
  app.add_option("--seed", flags.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--workers", flags.workers, "worker threads for sweeps")->capture_default_str();
  app.add_flag("--timing", flags.timing, "include real elapsed_ms in JSON sweep reports");
  app.add_option("--memo-cap", flags.memo_cap, "cap entries per memo table (0 = unlimited)")
      ->each([&](const std::string&) { flags.memo_cap_set = true; });

  std::string arg_a, arg_b, arg_c, arg_lambda, arg_mu, arg_nu, arg_rho, arg_tau;
  std::string arg_v, arg_u, arg_w, arg_i, arg_j, arg_k, arg_s, arg_alpha, arg_beta, arg_gamma;
  int arg_n = 0, arg_r = 0, arg_size = 0;
  Coeff arg_bound = 0;
  bool arg_schur = false;

  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient c_{a,b}^c");
  lr_cmd->add_option("--a", arg_a)->required();
  lr_cmd->add_option("--b", arg_b)->required();
  lr_cmd->add_option("--c", arg_c)->required();

  auto* sp_cmd = app.add_subcommand("schur-prod", "expand s_a * s_b in the Schur basis");
  sp_cmd->add_option("--a", arg_a)->required();
  sp_cmd->add_option("--b", arg_b)->required();

  auto* cp_cmd = app.add_subcommand("char-prod", "expand chi_lambda * chi_mu at rank n");
  cp_cmd->add_option("--n", arg_n)->required();
  cp_cmd->add_option("--lambda", arg_lambda)->required();
  cp_cmd->add_option("--mu", arg_mu)->required();

  auto* jt_cmd = app.add_subcommand("jt-matrix", "generalized Jacobi-Trudi matrix X_{V,U}");
  jt_cmd->add_option("--v", arg_v)->required();
  jt_cmd->add_option("--u", arg_u)->required();

  auto* imm_cmd = app.add_subcommand("tl-imm", "Temperley-Lieb immanants of X_{V,U}");
  imm_cmd->add_option("--v", arg_v)->required();
  imm_cmd->add_option("--u", arg_u)->required();
  imm_cmd->add_option("--w", arg_w, "one-line 321-avoiding permutation; all immanants if absent");
  imm_cmd->add_flag("--schur", arg_schur, "also expand each immanant in the Schur basis");

  auto* theta_cmd = app.add_subcommand("theta", "S-compatible non-crossing matchings");
  theta_cmd->add_option("--n", arg_n)->required();
  theta_cmd->add_option("--s", arg_s, "comma-separated black vertices in [2n]")->required();

  auto* md_cmd = app.add_subcommand("minor-decomp",
                                    "complementary-minor product vs immanant sum");
  md_cmd->add_option("--i", arg_i)->required();
  md_cmd->add_option("--j", arg_j)->required();
  md_cmd->add_option("--v", arg_v, "rows of a symbolic Jacobi-Trudi matrix");
  md_cmd->add_option("--u", arg_u, "columns of a symbolic Jacobi-Trudi matrix");
  md_cmd->add_option("--random-size", arg_size, "use a seeded random integer matrix");

  auto* hkc_cmd = app.add_subcommand("hk-check", "one Horn-Klyachko inequality");
  hkc_cmd->add_option("--n", arg_n)->required();
  hkc_cmd->add_option("--alpha", arg_alpha)->required();
  hkc_cmd->add_option("--beta", arg_beta)->required();
  hkc_cmd->add_option("--gamma", arg_gamma)->required();
  hkc_cmd->add_option("--i", arg_i)->required();
  hkc_cmd->add_option("--j", arg_j)->required();
  hkc_cmd->add_option("--k", arg_k)->required();

  auto* hko_cmd = app.add_subcommand("hk-oracle",
                                     "LR positivity via the full inequality system");
  hko_cmd->add_option("--n", arg_n)->required();
  hko_cmd->add_option("--alpha", arg_alpha)->required();
  hko_cmd->add_option("--beta", arg_beta)->required();
  hko_cmd->add_option("--gamma", arg_gamma)->required();

  auto* tr_cmd = app.add_subcommand("triples", "enumerate T_r^n");
  tr_cmd->add_option("--r", arg_r)->required();
  tr_cmd->add_option("--n", arg_n)->required();

  auto* poly_cmd = app.add_subcommand("polytope", "minimal alcoved polytope membership");
  poly_cmd->add_option("--n", arg_n)->required();
  poly_cmd->add_option("--lambda", arg_lambda)->required();
  poly_cmd->add_option("--mu", arg_mu)->required();
  poly_cmd->add_option("--tau", arg_tau)->required();

  auto* pairs_cmd = app.add_subcommand("pairs", "complementary weight pairs inside P_{lambda,mu}");
  pairs_cmd->add_option("--n", arg_n)->required();
  pairs_cmd->add_option("--lambda", arg_lambda)->required();
  pairs_cmd->add_option("--mu", arg_mu)->required();

  auto* pairing_cmd = app.add_subcommand("pairing", "constructive pairing for a triple in T_r^n");
  pairing_cmd->add_option("--n", arg_n)->required();
  pairing_cmd->add_option("--i", arg_i)->required();
  pairing_cmd->add_option("--j", arg_j)->required();
  pairing_cmd->add_option("--k", arg_k)->required();

  auto* verify_cmd = app.add_subcommand("verify",
                                        "support containment and chi-nonnegativity check");
  verify_cmd->add_option("--n", arg_n)->required();
  verify_cmd->add_option("--lambda", arg_lambda)->required();
  verify_cmd->add_option("--mu", arg_mu)->required();
  verify_cmd->add_option("--nu", arg_nu)->required();
  verify_cmd->add_option("--rho", arg_rho)->required();

  auto* st_cmd = app.add_subcommand("sweep-theorem", "exhaustive support-containment sweep");
  st_cmd->add_option("--n", arg_n)->required();
  st_cmd->add_option("--bound", arg_bound)->required();

  auto* sc_cmd = app.add_subcommand("sweep-conjecture", "exhaustive chi-nonnegativity sweep");
  sc_cmd->add_option("--n", arg_n)->required();
  sc_cmd->add_option("--bound", arg_bound)->required();

  auto* selftest_cmd = app.add_subcommand("self-test", "internal consistency battery");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (flags.memo_cap_set) set_memo_cap(flags.memo_cap);

  try {
    if (*lr_cmd) {
      Coeff c = lr_coefficient(Partition::parse(arg_a), Partition::parse(arg_b),
                               Partition::parse(arg_c));
      if (flags.json) {
        Json j;
        j["coeff"] = c;
        emit(out, j);
      } else {
        out << c << "\n";
      }
      return 0;
    }

    if (*sp_cmd) {
      SchurVector prod = schur_product(Partition::parse(arg_a), Partition::parse(arg_b));
      if (flags.json) emit(out, to_json(prod));
      else out << prod.to_string() << "\n";
      return 0;
    }

    if (*cp_cmd) {
      CharacterVector prod =
          character_product(parse_weight(arg_lambda, arg_n), parse_weight(arg_mu, arg_n));
      if (flags.json) emit(out, to_json(prod));
      else out << prod.to_string() << "\n";
      return 0;
    }

    if (*jt_cmd) {
      auto X = generalized_jacobi_trudi(parse_sequence(arg_v), parse_sequence(arg_u));
      if (flags.json) emit(out, to_json(X));
      else {
        for (int i = 1; i <= X.n(); ++i) {
          for (int j = 1; j <= X.n(); ++j) out << (j > 1 ? "  " : "") << X.at(i, j).to_string();
          out << "\n";
        }
      }
      return 0;
    }

    if (*imm_cmd) {
      auto X = generalized_jacobi_trudi(parse_sequence(arg_v), parse_sequence(arg_u));
      std::vector<std::pair<NonCrossingMatching, HPolynomial>> results;
      if (arg_w.empty()) {
        for (auto& [m, imm] : tl_immanants_all(X)) results.emplace_back(m, imm);
      } else {
        std::vector<int> image;
        for (Coeff x : parse_sequence(arg_w)) image.push_back(static_cast<int>(x));
        auto m = matching_of_permutation(Permutation::from_one_line(image));
        results.emplace_back(m, tl_immanant(m, X));
      }
      if (flags.json) {
        Json list = Json::array();
        for (const auto& [m, imm] : results) {
          Json item;
          item["matching"] = to_json(m);
          item["immanant"] = to_json(imm);
          if (arg_schur) item["schur"] = to_json(h_poly_to_schur(imm));
          list.push_back(std::move(item));
        }
        emit(out, list);
      } else {
        for (const auto& [m, imm] : results) {
          out << "matching:\n" << m.to_ascii();
          out << "immanant: " << imm.to_string() << "\n";
          if (arg_schur) out << "schur: " << h_poly_to_schur(imm).to_string() << "\n";
        }
      }
      return 0;
    }

    if (*theta_cmd) {
      std::set<int> members;
      for (Coeff x : parse_sequence(arg_s)) members.insert(static_cast<int>(x));
      auto matchings = theta(ColorSet(arg_n, members));
      if (flags.json) {
        Json list = Json::array();
        for (const auto& m : matchings) list.push_back(to_json(m));
        emit(out, list);
      } else {
        out << matchings.size() << " compatible matchings\n";
        for (const auto& m : matchings) out << m.to_ascii() << "\n";
      }
      return 0;
    }

    if (*md_cmd) {
      const bool symbolic = !arg_v.empty();
      if (symbolic == (arg_size > 0)) {
        err << "error: pass either --v/--u or --random-size\n";
        return 2;
      }
      Json j;
      bool holds = false;
      if (symbolic) {
        auto X = generalized_jacobi_trudi(parse_sequence(arg_v), parse_sequence(arg_u));
        auto dec = minor_product_decomposition(X, parse_subset(arg_i, X.n()),
                                               parse_subset(arg_j, X.n()));
        holds = dec.identity_holds;
        j["color_set"] = to_json(dec.color_set);
        j["minor_product"] = to_json(dec.minor_product);
        j["immanant_sum"] = to_json(dec.immanant_sum);
        Json terms = Json::array();
        for (const auto& [m, imm] : dec.immanants) {
          Json item;
          item["matching"] = to_json(m);
          item["immanant"] = to_json(imm);
          terms.push_back(std::move(item));
        }
        j["immanants"] = std::move(terms);
      } else {
        auto X = seeded_matrix(arg_size, flags.seed);
        auto dec = minor_product_decomposition(X, parse_subset(arg_i, X.n()),
                                               parse_subset(arg_j, X.n()));
        holds = dec.identity_holds;
        j["matrix"] = to_json(X);
        j["color_set"] = to_json(dec.color_set);
        j["minor_product"] = dec.minor_product.value;
        j["immanant_sum"] = dec.immanant_sum.value;
        Json terms = Json::array();
        for (const auto& [m, imm] : dec.immanants) {
          Json item;
          item["matching"] = to_json(m);
          item["immanant"] = imm.value;
          terms.push_back(std::move(item));
        }
        j["immanants"] = std::move(terms);
      }
      j["identity_holds"] = holds;
      if (flags.json) emit(out, j);
      else out << (holds ? "identity holds\n" : "identity FAILED\n");
      if (!holds) {
        err << "error: complementary-minor identity failed\n";
        return 3;
      }
      return 0;
    }

    if (*hkc_cmd) {
      Triple t(arg_n, parse_subset(arg_i, arg_n), parse_subset(arg_j, arg_n),
               parse_subset(arg_k, arg_n));
      bool ok = hk_inequality(Partition::parse(arg_alpha), Partition::parse(arg_beta),
                              Partition::parse(arg_gamma), t);
      if (flags.json) {
        Json j;
        j["holds"] = ok;
        emit(out, j);
      } else {
        out << (ok ? "holds" : "fails") << "\n";
      }
      return 0;
    }

    if (*hko_cmd) {
      bool positive = lr_positive_via_hk(Partition::parse(arg_alpha), Partition::parse(arg_beta),
                                         Partition::parse(arg_gamma), arg_n);
      if (flags.json) {
        Json j;
        j["positive"] = positive;
        emit(out, j);
      } else {
        out << (positive ? "positive" : "zero") << "\n";
      }
      return 0;
    }

    if (*tr_cmd) {
      const auto& triples = enumerate_triples(arg_r, arg_n);
      if (flags.json) {
        Json list = Json::array();
        for (const Triple& t : triples) list.push_back(to_json(t));
        emit(out, list);
      } else {
        for (const Triple& t : triples) {
          out << "I={";
          for (std::size_t idx = 0; idx < t.I.elements().size(); ++idx)
            out << (idx ? "," : "") << t.I.elements()[idx];
          out << "} J={";
          for (std::size_t idx = 0; idx < t.J.elements().size(); ++idx)
            out << (idx ? "," : "") << t.J.elements()[idx];
          out << "} K={";
          for (std::size_t idx = 0; idx < t.K.elements().size(); ++idx)
            out << (idx ? "," : "") << t.K.elements()[idx];
          out << "}\n";
        }
        out << triples.size() << " triples\n";
      }
      return 0;
    }

    if (*poly_cmd) {
      PolytopeSpec box{parse_weight(arg_lambda, arg_n), parse_weight(arg_mu, arg_n)};
      bool inside = in_minimal_alcoved(parse_weight(arg_tau, arg_n), box);
      if (flags.json) {
        Json j;
        j["inside"] = inside;
        emit(out, j);
      } else {
        out << (inside ? "inside" : "outside") << "\n";
      }
      return 0;
    }

    if (*pairs_cmd) {
      PolytopeSpec box{parse_weight(arg_lambda, arg_n), parse_weight(arg_mu, arg_n)};
      auto pairs = enumerate_complementary_pairs(box);
      if (flags.json) {
        Json list = Json::array();
        for (const auto& [nu, rho] : pairs) {
          Json nu_coords = Json::array(), rho_coords = Json::array();
          for (int i = 1; i <= arg_n; ++i) {
            nu_coords.push_back(nu.rep().part(static_cast<std::size_t>(i)));
            rho_coords.push_back(rho.rep().part(static_cast<std::size_t>(i)));
          }
          list.push_back(Json::array({std::move(nu_coords), std::move(rho_coords)}));
        }
        emit(out, list);
      } else {
        for (const auto& [nu, rho] : pairs)
          out << "(" << nu.rep().to_string_padded(static_cast<std::size_t>(arg_n)) << ") + ("
              << rho.rep().to_string_padded(static_cast<std::size_t>(arg_n)) << ")\n";
        out << pairs.size() << " pairs\n";
      }
      return 0;
    }

    if (*pairing_cmd) {
      Triple t(arg_n, parse_subset(arg_i, arg_n), parse_subset(arg_j, arg_n),
               parse_subset(arg_k, arg_n));
      auto [pairing, trace] = construct_pairing(t);
      bool valid = verify_pairing(t, pairing);
      bool claim = trace_claim_holds(trace);
      if (flags.json) {
        Json j;
        j["triple"] = to_json(t);
        j["pairing"] = to_json(pairing);
        j["verified"] = valid;
        j["claim_holds"] = claim;
        j["trace"] = to_json(trace);
        emit(out, j);
      } else {
        out << "l = ";
        for (std::size_t idx = 0; idx < pairing.l.size(); ++idx)
          out << (idx ? "," : "") << pairing.l[idx];
        out << "\nm = ";
        for (std::size_t idx = 0; idx < pairing.m.size(); ++idx)
          out << (idx ? "," : "") << pairing.m[idx];
        out << "\nverified: " << (valid ? "yes" : "NO") << ", claim: "
            << (claim ? "yes" : "NO") << "\n";
      }
      if (!valid || !claim) {
        err << "error: constructed pairing failed verification\n";
        return 3;
      }
      return 0;
    }

    if (*verify_cmd) {
      auto report = support_containment_check(parse_weight(arg_lambda, arg_n),
                                              parse_weight(arg_mu, arg_n),
                                              parse_weight(arg_nu, arg_n),
                                              parse_weight(arg_rho, arg_n));
      auto nonneg = chi_nonnegativity_check(report.inputs.lambda, report.inputs.mu,
                                            report.inputs.nu, report.inputs.rho);
      if (flags.json) {
        Json j = to_json(report);
        j["nonnegative"] = nonneg.nonnegative;
        emit(out, j);
      } else {
        out << "preconditions: sum " << (report.preconditions.sum_matches ? "ok" : "VIOLATED")
            << ", polytope " << (report.preconditions.corners_contain ? "ok" : "VIOLATED")
            << "\n";
        out << "containment: " << (report.contained() ? "holds" : "FAILS") << "\n";
        out << "difference: " << report.difference.to_string() << "\n";
        out << "nonnegative: " << (nonneg.nonnegative ? "yes" : "NO") << "\n";
      }
      return (report.contained() && nonneg.nonnegative) ? 0 : 1;
    }

    if (*st_cmd || *sc_cmd) {
      SweepReport report = *st_cmd ? sweep_theorem(arg_n, arg_bound, flags.workers)
                                   : sweep_conjecture(arg_n, arg_bound, flags.workers);
      if (flags.json) {
        if (!flags.timing) report.elapsed_ms = 0;
        emit(out, to_json(report));
      } else {
        out << "pairs examined: " << report.pairs_examined
            << ", quadruples: " << report.quadruples << ", max support: " << report.max_support
            << ", elapsed: " << report.elapsed_ms << " ms\n";
        out << "violations: " << report.violations.size() << "\n";
        for (const SweepViolation& v : report.violations) emit(out, to_json(v.inputs));
      }
      return report.violations.empty() ? 0 : 1;
    }

    if (*selftest_cmd) {
      auto failures = run_self_test(flags.seed);
      if (flags.json) {
        Json j;
        j["failures"] = Json(failures);
        j["ok"] = failures.empty();
        emit(out, j);
      } else {
        if (failures.empty()) out << "all self-tests passed\n";
        for (const auto& f : failures) out << "FAILED: " << f << "\n";
      }
      return failures.empty() ? 0 : 3;
    }
  } catch (const ArithmeticOverflow& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace schurtl::cli
