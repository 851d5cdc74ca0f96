#pragma once

#include "conglift/conditions/ge.hpp"
#include "conglift/conditions/lemma41.hpp"
#include "conglift/conditions/sap.hpp"
#include "conglift/conditions/usc.hpp"
#include "conglift/error.hpp"
#include "conglift/exactring/ring_elem.hpp"
#include "conglift/lifting/certificate.hpp"
#include "conglift/lifting/surjectivity.hpp"
#include "conglift/matgroup/elementary.hpp"
#include "conglift/projspace/projspace.hpp"

#include <json.hpp>

#include <string>
#include <type_traits>

namespace conglift::io {

using Json = nlohmann::ordered_json;

// Integers are decimal strings; polynomials are coefficient arrays, lowest
// degree first.

inline Json to_json(const Int &a) { return a.str(); }
inline Json to_json(const Poly &a) { return a.coeffs; }

inline Int int_from_json(const Json &j) {
  try {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
  } catch (const std::exception &) {
  }
  fail(Errc::parse_error, "expected an integer, got " + j.dump());
}

inline Poly poly_from_json(const PolyRing &r, const Json &j) {
  if (!j.is_array()) fail(Errc::parse_error, "expected a coefficient array");
  std::vector<std::uint64_t> c;
  for (const auto &x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
      fail(Errc::parse_error, "coefficients must be non-negative integers");
    c.push_back(x.get<std::uint64_t>());
  }
  return r.make(std::move(c));
}

inline Json ring_json(const IntegerRing &) { return Json{{"base", "Z"}}; }
inline Json ring_json(const PolyRing &r) {
  return Json{{"base", "F_p[x]"}, {"p", r.characteristic()}};
}
template <EuclideanDomain B> Json ring_json(const QuotientRing<B> &q) {
  Json j = ring_json(q.base());
  j["modulus"] = to_json(q.modulus());
  return j;
}

inline Json to_json(const RingElem &e) {
  return std::visit([](const auto &v) { return to_json(v); }, e.value);
}

template <class T> Json matrix_rows(const Matrix<T> &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Ring R> Json matrix_json(const R &r, const MatrixOf<R> &m) {
  return Json{{"ring", ring_json(r)}, {"rows", matrix_rows(m)}};
}

template <class T> Json word_json(const ElemWord<T> &w) {
  Json out = Json::array();
  for (const auto &f : w.factors)
    out.push_back(Json{{"i", f.i}, {"j", f.j}, {"t", to_json(f.t)}});
  return out;
}

template <class T, class Parse>
Matrix<T> matrix_from_rows(const Json &rows, Parse &&parse) {
  if (!rows.is_array()) fail(Errc::parse_error, "\"rows\" must be an array");
  std::vector<std::vector<T>> out;
  for (const auto &row : rows) {
    if (!row.is_array()) fail(Errc::parse_error, "matrix row must be an array");
    std::vector<T> r;
    for (const auto &e : row) r.push_back(parse(e));
    out.push_back(std::move(r));
  }
  return Matrix<T>::from_rows(out);
}

inline Matrix<Int> int_matrix_from_json(const Json &j) {
  const Json &rows = j.is_object() ? j.at("rows") : j;
  return matrix_from_rows<Int>(rows, int_from_json);
}

inline Json verdicts_json(const Verdicts &v) {
  Json j;
  j["determinant"] = v.determinant;
  if (v.form) j["form"] = *v.form;
  j["rows"] = v.rows;
  j["level"] = v.level;
  j["all"] = v.all();
  return j;
}

inline Json certificate_json(const LiftCertificate &c) {
  Json j;
  j["group"] = std::string(to_string(c.group));
  j["k"] = c.k;
  j["B"] = matrix_json(IntegerRing{}, c.b);
  Json rows = Json::array();
  for (const auto &r : c.rows) {
    Json row = Json::array();
    for (const auto &x : r) row.push_back(to_json(x));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  Json ideals = Json::array();
  for (const auto &g : c.ideals) ideals.push_back(to_json(g));
  j["ideals"] = std::move(ideals);
  j["level"] = to_json(c.level);
  j["verdicts"] = verdicts_json(c.verdicts);
  return j;
}

inline GroupKind group_from_string(const std::string &s) {
  if (s == "sl") return GroupKind::SL;
  if (s == "sp") return GroupKind::SP;
  fail(Errc::parse_error, "unknown group kind \"" + s + "\" (expected sl or sp)");
}

/// Parses a certificate; stored verdicts are read back as claimed but
/// verify_certificate recomputes them.
inline LiftCertificate certificate_from_json(const Json &j) {
  try {
    LiftCertificate c;
    c.group = group_from_string(j.at("group").get<std::string>());
    c.k = j.at("k").get<std::size_t>();
    c.b = int_matrix_from_json(j.at("B"));
    for (const auto &row : j.at("rows")) {
      std::vector<Int> r;
      for (const auto &x : row) r.push_back(int_from_json(x));
      c.rows.push_back(std::move(r));
    }
    for (const auto &g : j.at("ideals")) c.ideals.push_back(int_from_json(g));
    c.level = int_from_json(j.at("level"));
    if (j.contains("verdicts")) {
      const auto &v = j.at("verdicts");
      c.verdicts.determinant = v.value("determinant", false);
      if (v.contains("form")) c.verdicts.form = v.at("form").get<bool>();
      if (v.contains("rows")) c.verdicts.rows = v.at("rows").get<std::vector<bool>>();
      c.verdicts.level = v.value("level", false);
    }
    return c;
  } catch (const Error &) {
    throw;
  } catch (const std::exception &e) {
    fail(Errc::parse_error, std::string("malformed certificate: ") + e.what());
  }
}

template <EuclideanDomain B> Json point_json(const ProjPoint<B> &p) {
  if (p.singleton) return Json{{"singleton", true}};
  Json rep = Json::array();
  for (const auto &x : p.rep) rep.push_back(to_json(x));
  return Json{{"ideal", to_json(p.ideal.generator())},
              {"weights", p.weights.values()},
              {"rep", std::move(rep)}};
}

template <FiniteRing S> Json usc_report_json(const S &s, const UscReport<elem_t<S>> &r) {
  auto elem = [&](const elem_t<S> &v) {
    if constexpr (std::is_same_v<elem_t<S>, Int> || std::is_same_v<elem_t<S>, Poly>) {
      (void)s;
      return to_json(v);
    } else {
      Json a = Json::array();
      for (const auto &x : v) a.push_back(to_json(x));
      return a;
    }
  };
  Json j;
  j["verdict"] = r.satisfied;
  j["bounds"] = Json{{"max_set_size", r.max_set_size},
                     {"sets_scanned", r.sets_scanned},
                     {"unital_sets", r.unital_sets},
                     {"guard", r.guard}};
  Json w = Json::array();
  for (const auto &[set, b] : r.witnesses) {
    Json sj = Json::array();
    for (const auto &x : set) sj.push_back(elem(x));
    w.push_back(Json{{"set", std::move(sj)}, {"b", elem(b)}});
  }
  j["witnesses"] = std::move(w);
  if (r.counterexample) {
    Json sj = Json::array();
    for (const auto &x : *r.counterexample) sj.push_back(elem(x));
    j["counterexample"] = std::move(sj);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

inline Json zero_refutation_json(const ZeroIdealRefutation &r) {
  Json set = Json::array();
  for (const auto &x : r.set) set.push_back(to_json(x));
  Json units = Json::array();
  for (const auto &x : r.unit_residues) units.push_back(to_json(x));
  return Json{{"ideal", "0"},
              {"set", std::move(set)},
              {"tail_gcd", to_json(r.tail_gcd)},
              {"head_residue", to_json(r.head_residue)},
              {"unit_residues", std::move(units)},
              {"refuted", r.refuted}};
}

inline Json poly_refutation_json(const PolyRefutation &r) {
  return Json{
      {"ring", "F_5[x]"},
      {"head", Json::array({0, 1})},
      {"tail", Json::array({4, 0, 3})},
      {"exhaustive",
       Json{{"degree_bound", r.degree_bound},
            {"candidates", r.candidates},
            {"non_units", r.non_units},
            {"min_degree", r.min_degree},
            {"degree_formula_holds", r.degree_formula_holds}}},
      {"symbolic",
       Json{{"prime", r.prime},
            {"tail_leading_coefficient", r.tail_leading},
            {"leading_products", r.leading_products},
            {"leading_products_nonzero", r.leading_products_nonzero},
            {"nonzero_t_degree", "deg t + 2"},
            {"zero_t_degree", r.zero_t_degree}}},
      {"unital_witness", Json{{"x_coefficient", to_json(r.bezout_x)},
                              {"tail_coefficient", to_json(r.bezout_tail)}}},
      {"refuted", r.refuted()}};
}

inline Json sap_report_json(const SapReport &r) {
  return Json{{"group", std::string(to_string(r.group))},
              {"k", r.k},
              {"modulus", to_json(r.modulus)},
              {"group_order", r.group_order},
              {"lifted", r.lifted},
              {"verdict", r.verdict()}};
}

inline Json lemma41_json(const Lemma41Report &r) {
  return Json{{"group", std::string(to_string(r.group))},
              {"k", r.k},
              {"I", to_json(r.i_gen)},
              {"J", to_json(r.j_gen)},
              {"order_IJ", r.order_ij},
              {"order_I", r.order_i},
              {"order_J", r.order_j},
              {"order_identity", r.order_identity()},
              {"identity_in_all", r.identity_in_all},
              {"samples", r.samples},
              {"intersection_ok", r.intersection_ok},
              {"factorization_ok", r.factorization_ok},
              {"verdict", r.verdict()}};
}

inline Json ge_report_json(const GeReport &r) {
  return Json{{"n", r.n},
              {"closure_size", r.closure_size},
              {"group_order", r.group_order},
              {"overflow", r.overflow},
              {"verdict", r.verdict()}};
}

inline Json surjectivity_json(const SurjectivityReport &r, bool with_certificates) {
  Json j;
  j["group"] = std::string(to_string(r.group));
  j["k"] = r.k;
  Json ideals = Json::array();
  for (const auto &g : r.ideals) ideals.push_back(to_json(g));
  j["ideals"] = std::move(ideals);
  j["level"] = to_json(r.level);
  Json w = Json::array();
  for (const auto &x : r.weights) w.push_back(x.values());
  j["weights"] = std::move(w);
  j["class_counts"] = r.class_counts;
  j["product_size"] = r.product_size;
  j["exhaustive"] = r.exhaustive;
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["attempted"] = r.attempted;
  j["verified"] = r.verified;
  if (with_certificates) {
    Json certs = Json::array();
    for (const auto &c : r.certificates) certs.push_back(certificate_json(c));
    j["certificates"] = std::move(certs);
  }
  j["verdict"] = r.verdict();
  return j;
}

} // namespace conglift::io
