#pragma once

#include "conglift/conglift.hpp"
#include "conglift/io/json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace conglift::cli {

using io::Json;

enum Exit : int { ok = 0, verdict_false = 1, input_error = 2 };

namespace detail {

inline std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline Int parse_int(const std::string &tok) {
  const bool neg = !tok.empty() && tok[0] == '-';
  if (tok.size() == (neg ? 1u : 0u) ||
      tok.find_first_not_of("0123456789", neg ? 1 : 0) != std::string::npos)
    fail(Errc::parse_error, "not an integer: \"" + tok + "\"");
  return Int(tok);
}

inline std::vector<Int> parse_ints(const std::string &s) {
  std::vector<Int> out;
  for (const auto &t : split(s, ',')) out.push_back(parse_int(t));
  return out;
}

inline std::vector<std::vector<Int>> parse_int_rows(const std::string &s) {
  std::vector<std::vector<Int>> out;
  for (const auto &row : split(s, ';')) out.push_back(parse_ints(row));
  return out;
}

inline std::uint64_t to_u64(const Int &v, const char *what) {
  if (v < 0 || v > Int(std::numeric_limits<std::uint64_t>::max()))
    fail(Errc::parse_error, std::string(what) + " out of range");
  return static_cast<std::uint64_t>(v);
}

inline WeightVector parse_weight_row(const std::string &s) {
  std::vector<std::uint64_t> w;
  for (const auto &v : parse_ints(s)) w.push_back(to_u64(v, "weight"));
  return WeightVector(std::move(w));
}

inline std::vector<WeightVector> parse_weights(const std::string &s) {
  std::vector<WeightVector> out;
  for (const auto &row : split(s, ';')) out.push_back(parse_weight_row(row));
  return out;
}

inline Poly parse_poly(const PolyRing &r, const std::string &s) {
  std::vector<std::uint64_t> c;
  for (const auto &v : parse_ints(s)) c.push_back(to_u64(v, "coefficient"));
  return r.make(std::move(c));
}

inline Json ints_json(const std::vector<Int> &v) {
  Json a = Json::array();
  for (const auto &x : v) a.push_back(io::to_json(x));
  return a;
}

inline Json rows_json(const std::vector<std::vector<Int>> &rows) {
  Json a = Json::array();
  for (const auto &r : rows) a.push_back(ints_json(r));
  return a;
}

inline Json weights_json(const std::vector<WeightVector> &ws) {
  Json a = Json::array();
  for (const auto &w : ws) a.push_back(w.values());
  return a;
}

inline GroupKind parse_group(const std::string &s) { return io::group_from_string(s); }

inline std::string read_input(const std::string &path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path);
  if (!in) fail(Errc::invalid_argument, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Outcome of one subcommand: the echoed request, the result document, and
// whether the checked claim holds.
struct Outcome {
  Json request;
  Json result;
  bool verdict = true;
};

} // namespace detail

/// Runs one CLI invocation. argv[0] is the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err = std::cerr) {
  using namespace detail;

  CLI::App app{"Exact lifts into congruence subgroups of SL and Sp over Z"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string output_path;
  app.add_option("-o,--output", output_path, "write the JSON document here");

  // shared option storage
  std::string rows_s, ideals_s, weights_s, ideal_s, tuple_s, set_s, matrix_s,
      modulus_s, moduli_s, group_s = "sl", input_s;
  std::string level_s, n_s, i_s, j_s;
  std::size_t k = 1, max_size = 3, samples = 0, cap = 1'000'000;
  std::uint64_t seed = 0, guard = 0, p = 0;
  int degree = 3;
  bool poly_example = false, closure = false, with_certs = false;

  auto *lift_sl = app.add_subcommand("lift-sl", "lift rows into Gamma(J) of SL_{k+1}(Z)");
  auto *lift_sp = app.add_subcommand("lift-sp", "lift rows into Gamma(J) of Sp_{2k}(Z)");
  for (auto *s : {lift_sl, lift_sp}) {
    s->add_option("--rows", rows_s, "target rows, e.g. 1,2;3,5")->required();
    s->add_option("--ideals", ideals_s, "generators of I_i, e.g. 2,3")->required();
    s->add_option("--level", level_s, "generator of J")->required();
  }

  auto *pf_enum = app.add_subcommand("pf-enum", "enumerate PF^{k,w}_I");
  pf_enum->add_option("--k", k)->required();
  pf_enum->add_option("--ideal", ideal_s, "generator (coefficients with --p)")->required();
  pf_enum->add_option("--weights", weights_s, "m_0,...,m_k (default all 1)");
  pf_enum->add_option("--p", p, "work in F_p[x]");
  pf_enum->add_option("--guard", guard);

  auto *pf_canon = app.add_subcommand("pf-canon", "canonical representative of a class");
  pf_canon->add_option("--ideal", ideal_s)->required();
  pf_canon->add_option("--tuple", tuple_s, "a_0,...,a_k (with --p: coefficient lists split by ;)")
      ->required();
  pf_canon->add_option("--weights", weights_s);
  pf_canon->add_option("--p", p);

  auto *usc_check = app.add_subcommand("usc-check", "exhaustive unital set condition check");
  usc_check->add_option("--modulus", modulus_s, "ring Z/n (coefficients with --p)");
  usc_check->add_option("--moduli", moduli_s, "product Z/n_1 x ... x Z/n_r");
  usc_check->add_option("--p", p, "work in F_p[x]/(f)");
  usc_check->add_option("--ideal", ideal_s, "generator of the ideal of the ring (default 0)");
  usc_check->add_option("--max-size", max_size, "largest set size");
  usc_check->add_option("--guard", guard);
  usc_check->add_flag("--poly-example", poly_example, "refute <x> against {x, 3x^2-1} in F_5[x]");
  usc_check->add_option("--degree", degree, "degree bound for --poly-example");

  auto *usc_witness = app.add_subcommand("usc-witness", "witness b for a unital set of Z");
  usc_witness->add_option("--set", set_s, "a_1,...,a_k")->required();
  usc_witness->add_option("--n", n_s, "generator of I (0 gives the refutation)")->required();

  auto *sap_check = app.add_subcommand("sap-check", "exhaustive SAP round trips over Z/n");
  sap_check->add_option("--group", group_s);
  sap_check->add_option("--k", k);
  sap_check->add_option("--n", n_s)->required();
  sap_check->add_option("--guard", guard);

  auto *ge_dec = app.add_subcommand("ge-decompose", "elementary factorization or GE closure");
  ge_dec->add_option("--matrix", matrix_s, "rows split by ;");
  ge_dec->add_option("--modulus", modulus_s, "work over Z/n (coefficients with --p)");
  ge_dec->add_option("--p", p, "work over F_p[x] or its quotient");
  ge_dec->add_flag("--closure", closure, "compare the elementary closure with SL_n");
  ge_dec->add_option("--n", k, "matrix size for --closure");
  ge_dec->add_option("--cap", cap);

  auto *l41 = app.add_subcommand("lemma41-check", "orders and factorizations for co-maximal I, J");
  l41->add_option("--group", group_s);
  l41->add_option("--k", k);
  l41->add_option("--I", i_s)->required();
  l41->add_option("--J", j_s)->required();
  l41->add_option("--samples", samples)->required();
  l41->add_option("--seed", seed)->required();
  l41->add_option("--guard", guard);

  auto *verify = app.add_subcommand("verify", "recheck a certificate");
  verify->add_option("--input", input_s, "certificate file, - for stdin")->required();

  auto *surj = app.add_subcommand("surjectivity", "lift every target of a PF product");
  surj->add_option("--group", group_s);
  surj->add_option("--k", k)->required();
  surj->add_option("--ideals", ideals_s)->required();
  surj->add_option("--level", level_s)->required();
  surj->add_option("--weights", weights_s, "rows split by ; (one row applies to all)");
  auto *samples_opt = surj->add_option("--samples", samples, "random targets instead of all");
  auto *seed_opt = surj->add_option("--seed", seed);
  surj->add_flag("--certificates", with_certs, "include every certificate");
  surj->add_option("--guard", guard);

  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());

  auto emit = [&](const Json &doc) {
    const std::string text = doc.dump(2) + "\n";
    if (output_path.empty()) {
      out << text;
    } else {
      std::ofstream f(output_path);
      f << text;
    }
  };
  auto emit_error = [&](const std::string &cmd, const std::string &code,
                        const std::string &msg) {
    Json doc;
    doc["command"] = cmd;
    doc["error"] = Json{{"code", code}, {"message", msg}};
    out << doc.dump(2) << "\n";
    return Exit::input_error;
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return Exit::ok;
  } catch (const CLI::ParseError &e) {
    return emit_error("", "parse_error", e.what());
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  auto guard_or = [&](std::uint64_t dflt) { return guard == 0 ? dflt : guard; };

  try {
    Outcome o;
    const IntegerRing z;

    if (cmd == "lift-sl" || cmd == "lift-sp") {
      const auto rows = parse_int_rows(rows_s);
      const auto ideals = parse_ints(ideals_s);
      const Int level = parse_int(level_s);
      o.request = Json{{"rows", rows_json(rows)},
                       {"ideals", ints_json(ideals)},
                       {"level", io::to_json(level)}};
      auto cert = cmd == "lift-sl" ? omega_lift(rows, ideals, level)
                                   : sigma_lift(rows, ideals, level);
      o.result = io::certificate_json(cert);
      o.verdict = cert.verdicts.all();

    } else if (cmd == "pf-enum" || cmd == "pf-canon") {
      std::vector<std::string> tuple_tokens;
      if (cmd == "pf-canon")
        tuple_tokens = split(tuple_s, p ? ';' : ',');
      const std::size_t len = cmd == "pf-enum" ? k + 1 : tuple_tokens.size();
      const WeightVector w =
          weights_s.empty() ? WeightVector::ones(len) : parse_weight_row(weights_s);
      if (w.size() != len)
        fail(Errc::shape_mismatch, "expected " + std::to_string(len) + " weights");
      o.request = Json{{"ideal", ideal_s}, {"weights", w.values()}};
      if (p) o.request["p"] = p;

      auto body = [&](const auto &base, auto ideal_gen, auto parse_elem) {
        using B = std::decay_t<decltype(base)>;
        const Ideal<B> ideal(base, ideal_gen);
        if (cmd == "pf-enum") {
          o.request["k"] = k;
          const auto pts = enumerate_pf(ideal, w, guard_or(1'000'000));
          Json arr = Json::array();
          for (const auto &pt : pts) arr.push_back(io::point_json(pt));
          o.result = Json{{"count", pts.size()}, {"points", std::move(arr)}};
        } else {
          std::vector<elem_t<B>> t;
          for (const auto &tok : tuple_tokens) t.push_back(parse_elem(tok));
          o.request["tuple"] = tuple_s;
          o.result = io::point_json(canon(make_point(ideal, w, std::move(t))));
        }
      };
      if (p) {
        const PolyRing f(p);
        body(f, parse_poly(f, ideal_s), [&](const std::string &s) { return parse_poly(f, s); });
      } else {
        body(z, parse_int(ideal_s), parse_int);
      }

    } else if (cmd == "usc-check") {
      if (poly_example) {
        o.request = Json{{"poly_example", true}, {"degree", degree}};
        const auto r = usc_refute_poly_example(degree);
        o.result = io::poly_refutation_json(r);
        o.verdict = r.refuted();
      } else {
        const std::size_t g = guard_or(1'000'000);
        o.request = Json{{"max_size", max_size}, {"guard", g}};
        auto finish = [&](const auto &ring, const auto &gen) {
          auto rep = usc_check_finite(ring, gen, max_size, g);
          o.result = io::usc_report_json(ring, rep);
          o.verdict = rep.satisfied;
        };
        if (!moduli_s.empty()) {
          std::vector<IntMod> factors;
          for (const auto &m : parse_ints(moduli_s)) factors.push_back(int_mod(m));
          const ProductRing<IntMod> prod(factors);
          std::vector<Int> gen(factors.size(), Int(0));
          if (!ideal_s.empty()) gen = parse_ints(ideal_s);
          if (gen.size() != factors.size())
            fail(Errc::shape_mismatch, "product ideal needs one generator per factor");
          for (std::size_t i = 0; i < gen.size(); ++i) gen[i] = factors[i].reduce(gen[i]);
          o.request["moduli"] = ints_json(parse_ints(moduli_s));
          o.request["ideal"] = ints_json(gen);
          finish(prod, gen);
        } else if (p) {
          const PolyRing f(p);
          const PolyMod q(f, parse_poly(f, modulus_s));
          const Poly gen = q.reduce(ideal_s.empty() ? f.zero() : parse_poly(f, ideal_s));
          o.request["p"] = p;
          o.request["modulus"] = io::to_json(q.modulus());
          o.request["ideal"] = io::to_json(gen);
          finish(q, gen);
        } else {
          if (modulus_s.empty())
            fail(Errc::invalid_argument, "usc-check needs --modulus, --moduli or --poly-example");
          const IntMod q = int_mod(parse_int(modulus_s));
          const Int gen = q.reduce(ideal_s.empty() ? Int(0) : parse_int(ideal_s));
          o.request["modulus"] = io::to_json(q.modulus());
          o.request["ideal"] = io::to_json(gen);
          finish(q, gen);
        }
      }

    } else if (cmd == "usc-witness") {
      const auto set = parse_ints(set_s);
      const Int n = parse_int(n_s);
      o.request = Json{{"set", ints_json(set)}, {"n", io::to_json(n)}};
      if (n.is_zero()) {
        const auto r = refute_zero_ideal_z(set);
        o.result = io::zero_refutation_json(r);
        o.verdict = r.refuted;
      } else {
        const auto w = usc_witness_z(set, n);
        o.result = Json{{"b", io::to_json(w.b)},
                        {"coefficients", ints_json(w.coefficients)},
                        {"head_plus_b_mod_n", io::to_json(int_mod(n).reduce(set[0] + w.b))}};
        o.verdict = true;
      }

    } else if (cmd == "sap-check") {
      const GroupKind grp = parse_group(group_s);
      const Int n = parse_int(n_s);
      const std::uint64_t g = guard_or(5'000'000);
      o.request = Json{{"group", std::string(to_string(grp))},
                       {"k", k},
                       {"n", io::to_json(n)},
                       {"guard", g}};
      const auto r = sap_check_small(grp, k, n, g);
      o.result = io::sap_report_json(r);
      o.verdict = r.verdict();

    } else if (cmd == "ge-decompose") {
      if (closure) {
        if (modulus_s.empty()) fail(Errc::invalid_argument, "--closure needs --modulus");
        o.request = Json{{"closure", true}, {"n", k}, {"modulus", modulus_s}, {"cap", cap}};
        auto finish = [&](const auto &ring) {
          const auto r = ge_check(ring, k, cap, guard_or(5'000'000));
          o.result = io::ge_report_json(r);
          o.verdict = r.verdict();
        };
        if (p) {
          const PolyRing f(p);
          o.request["p"] = p;
          finish(PolyMod(f, parse_poly(f, modulus_s)));
        } else {
          finish(int_mod(parse_int(modulus_s)));
        }
      } else {
        if (matrix_s.empty()) fail(Errc::invalid_argument, "ge-decompose needs --matrix or --closure");
        o.request = Json{{"matrix", matrix_s}};
        auto finish = [&](const auto &ring, const auto &m) {
          const auto w = elementary_decompose(ring, m);
          const bool match = word_to_matrix(ring, w) == m;
          o.result = Json{{"ring", io::ring_json(ring)},
                          {"word", io::word_json(w)},
                          {"length", w.factors.size()},
                          {"product_matches", match}};
          o.verdict = match;
        };
        if (p) {
          const PolyRing f(p);
          o.request["p"] = p;
          std::vector<std::vector<Poly>> rows;
          for (const auto &r : split(matrix_s, ';')) {
            std::vector<Poly> row;
            for (const auto &e : split(r, '|')) row.push_back(parse_poly(f, e));
            rows.push_back(std::move(row));
          }
          const auto m = Matrix<Poly>::from_rows(rows);
          if (modulus_s.empty()) {
            finish(f, m);
          } else {
            const PolyMod q(f, parse_poly(f, modulus_s));
            o.request["modulus"] = modulus_s;
            finish(q, reduce(q, m));
          }
        } else {
          const auto m = Matrix<Int>::from_rows(parse_int_rows(matrix_s));
          if (modulus_s.empty()) {
            finish(z, m);
          } else {
            const IntMod q = int_mod(parse_int(modulus_s));
            o.request["modulus"] = io::to_json(q.modulus());
            finish(q, reduce(q, m));
          }
        }
      }

    } else if (cmd == "lemma41-check") {
      const GroupKind grp = parse_group(group_s);
      const Int ig = parse_int(i_s), jg = parse_int(j_s);
      const std::uint64_t g = guard_or(5'000'000);
      o.request = Json{{"group", std::string(to_string(grp))},
                       {"k", k},
                       {"I", io::to_json(ig)},
                       {"J", io::to_json(jg)},
                       {"samples", samples},
                       {"seed", seed},
                       {"guard", g}};
      const auto r = lemma41_check(grp, k, ig, jg, samples, seed, g);
      o.result = io::lemma41_json(r);
      o.verdict = r.verdict();

    } else if (cmd == "verify") {
      o.request = Json{{"input", input_s}};
      Json doc;
      try {
        doc = Json::parse(read_input(input_s));
      } catch (const Json::parse_error &e) {
        fail(Errc::parse_error, std::string("malformed JSON: ") + e.what());
      }
      // accept a bare certificate or a lift-sl/lift-sp document
      if (doc.contains("result") && doc.contains("command")) doc = doc.at("result");
      const auto cert = io::certificate_from_json(doc);
      const auto fresh = compute_verdicts(cert);
      o.result = Json{{"group", std::string(to_string(cert.group))},
                      {"k", cert.k},
                      {"recomputed", io::verdicts_json(fresh)},
                      {"stored_matches", fresh == cert.verdicts},
                      {"valid", fresh.all()}};
      o.verdict = fresh.all();

    } else if (cmd == "surjectivity") {
      const GroupKind grp = parse_group(group_s);
      const auto ideals = parse_ints(ideals_s);
      const Int level = parse_int(level_s);
      const std::size_t n = group_dimension(grp, k);
      auto weights = weights_s.empty() ? std::vector<WeightVector>{WeightVector::ones(n)}
                                       : parse_weights(weights_s);
      std::optional<std::uint64_t> count;
      if (samples_opt->count() > 0) {
        if (seed_opt->count() == 0)
          fail(Errc::invalid_argument, "--samples needs --seed");
        count = samples;
      }
      const std::uint64_t g = guard_or(100'000);
      const auto r = surjectivity_run(grp, k, ideals, level, weights, count, seed, g);
      o.request = Json{{"group", std::string(to_string(grp))},
                       {"k", k},
                       {"ideals", ints_json(ideals)},
                       {"level", io::to_json(level)},
                       {"weights", weights_json(r.weights)},
                       {"samples", count ? Json(*count) : Json(nullptr)},
                       {"seed", count ? Json(seed) : Json(nullptr)},
                       {"guard", g}};
      o.result = io::surjectivity_json(r, with_certs);
      o.verdict = r.verdict();
    }

    Json doc;
    doc["command"] = cmd;
    doc["request"] = std::move(o.request);
    doc["result"] = std::move(o.result);
    doc["verdict"] = o.verdict;
    emit(doc);
    return o.verdict ? Exit::ok : Exit::verdict_false;
  } catch (const Error &e) {
    return emit_error(cmd, std::string(to_string(e.code())), e.what());
  } catch (const std::exception &e) {
    return emit_error(cmd, "invalid_argument", e.what());
  }
}

} // namespace conglift::cli
