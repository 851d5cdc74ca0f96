#pragma once

#include "conglift/error.hpp"
#include "conglift/exactring/quotient_ring.hpp"
#include "conglift/lifting/completion.hpp"
#include "conglift/lifting/sap_lift.hpp"
#include "conglift/matgroup/enumerate.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace conglift {

/// Entrywise CRT of matrices given modulo pairwise co-maximal ideals.
/// Returns the combined quotient and the matrix modulo the product ideal.
template <EuclideanDomain B>
std::pair<QuotientRing<B>, Matrix<elem_t<B>>>
crt_matrix(std::span<const Matrix<elem_t<B>>> targets,
           std::span<const QuotientRing<B>> moduli) {
  if (targets.empty() || targets.size() != moduli.size())
    fail(Errc::invalid_argument, "crt_matrix needs one modulus per target");
  const auto rows = targets.front().rows(), cols = targets.front().cols();
  for (const auto &t : targets)
    if (t.rows() != rows || t.cols() != cols)
      fail(Errc::shape_mismatch, "crt_matrix targets differ in shape");
  Matrix<elem_t<B>> out(rows, cols);
  std::optional<QuotientRing<B>> combined;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Residue<B>> res;
      for (std::size_t t = 0; t < targets.size(); ++t)
        res.emplace_back(moduli[t], targets[t](i, j));
      auto c = crt_combine<B>(res);
      out(i, j) = c.rep;
      if (!combined) combined = c.parent;
    }
  if (!combined) {
    std::vector<Residue<B>> res;
    for (const auto &m : moduli) res.emplace_back(m, m.zero());
    combined = crt_combine<B>(res).parent;
  }
  return {*combined, std::move(out)};
}

/// Evidence recomputed from a certificate's matrix and targets.
struct Verdicts {
  bool determinant = false;
  std::optional<bool> form; // symplectic certificates only
  std::vector<bool> rows;   // row i congruent to its target mod I_i
  bool level = false;       // B = Id mod J

  bool all() const {
    if (!determinant || !level) return false;
    if (form && !*form) return false;
    for (bool b : rows)
      if (!b) return false;
    return true;
  }
  friend bool operator==(const Verdicts &, const Verdicts &) = default;
};

/// A lifted matrix B in Gamma_k(J) with row i congruent to rows[i] modulo
/// ideals[i], plus the verdicts that were checked when it was produced.
struct LiftCertificate {
  GroupKind group = GroupKind::SL;
  std::size_t k = 0;
  Matrix<Int> b;
  std::vector<std::vector<Int>> rows;
  std::vector<Int> ideals; // canonical generators
  Int level;
  Verdicts verdicts;
};

/// Recomputes every verdict from scratch.
inline Verdicts compute_verdicts(const LiftCertificate &c) {
  const IntegerRing z;
  Verdicts v;
  const std::size_t n = group_dimension(c.group, c.k);
  const bool shape_ok = c.b.rows() == n && c.b.cols() == n &&
                        c.rows.size() == n && c.ideals.size() == n;
  if (!shape_ok) {
    v.rows.assign(c.rows.size(), false);
    if (c.group == GroupKind::SP) v.form = false;
    return v;
  }
  v.determinant = det(z, c.b) == 1;
  if (c.group == GroupKind::SP) v.form = is_symplectic(z, c.b);
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = c.rows[i].size() == n;
    for (std::size_t j = 0; ok && j < n; ++j)
      ok = divides(z, c.ideals[i], Int(c.b(i, j) - c.rows[i][j]));
    v.rows.push_back(ok);
  }
  const IntMod level(z, c.level);
  v.level = reduce(level, c.b) == identity(level, n);
  return v;
}

inline bool verify_certificate(const LiftCertificate &c) {
  return compute_verdicts(c).all();
}

namespace detail {

inline void check_lift_request(GroupKind group, const std::vector<std::vector<Int>> &rows,
                               const std::vector<Int> &ideals, const Int &level) {
  const IntegerRing z;
  const std::size_t n = rows.size();
  if (n == 0 || (group == GroupKind::SP && n % 2 != 0))
    fail(Errc::shape_mismatch, group == GroupKind::SL
                                   ? "need k+1 >= 1 rows"
                                   : "symplectic lift needs 2k rows");
  if (ideals.size() != n)
    fail(Errc::shape_mismatch, "need one ideal per row");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      fail(Errc::shape_mismatch, "row " + std::to_string(i) + " has length " +
                                     std::to_string(rows[i].size()) +
                                     ", expected " + std::to_string(n));
    if (!z.is_unit(gcd_all<IntegerRing>(z, rows[i])))
      fail(Errc::not_unital, "row " + std::to_string(i) + " is not unital");
  }
  Int prod = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (ideals[i].is_zero())
      fail(Errc::usc_hypothesis,
           "ideal " + std::to_string(i) + " is <0>, which fails the unital set condition in Z");
    for (std::size_t j = i + 1; j < n; ++j)
      if (!z.is_unit(gcd(z, ideals[i], ideals[j])))
        fail(Errc::not_comaximal, "ideals " + std::to_string(i) + " and " +
                                      std::to_string(j) + " (" + ideals[i].str() +
                                      ", " + ideals[j].str() +
                                      ") are not co-maximal");
    prod *= ideals[i];
  }
  if (level.is_zero())
    fail(Errc::usc_hypothesis, "level <0> fails the unital set condition in Z");
  if (!z.is_unit(gcd(z, prod, level)))
    fail(Errc::not_comaximal, "level " + level.str() +
                                  " is not co-maximal with the product ideal " +
                                  prod.str());
}

inline LiftCertificate lift_pipeline(GroupKind group, std::vector<std::vector<Int>> rows,
                                     std::vector<Int> ideals, Int level) {
  const IntegerRing z;
  check_lift_request(group, rows, ideals, level);
  for (auto &g : ideals) g = abs(g);
  level = abs(level);
  const std::size_t n = rows.size();

  std::vector<Matrix<Int>> targets;
  std::vector<IntMod> moduli;
  for (std::size_t i = 0; i < n; ++i) {
    if (ideals[i] == 1) continue; // unit ideal: no constraint
    const IntMod q(z, ideals[i]);
    auto full = group == GroupKind::SL ? complete_row_sl<IntegerRing>(z, rows[i], i)
                                       : complete_row_sp<IntegerRing>(z, rows[i], i);
    targets.push_back(reduce(q, full));
    moduli.push_back(q);
  }
  if (level != 1) {
    const IntMod q(z, level);
    targets.push_back(identity(q, n));
    moduli.push_back(q);
  }

  LiftCertificate cert;
  cert.group = group;
  cert.k = group == GroupKind::SL ? n - 1 : n / 2;
  if (targets.empty()) {
    cert.b = identity(z, n);
  } else {
    auto [q, c] = crt_matrix<IntegerRing>(targets, moduli);
    cert.b = group == GroupKind::SL ? sap_lift_sl(q, c) : sap_lift_sp(q, c);
  }
  cert.rows = std::move(rows);
  cert.ideals = std::move(ideals);
  cert.level = std::move(level);
  cert.verdicts = compute_verdicts(cert);
  return cert;
}

} // namespace detail

/// B in SL_{k+1}(Z), B = Id mod J, row i of B = rows[i] mod I_i. Ideals are
/// pairwise co-maximal generators, J co-maximal with their product.
inline LiftCertificate omega_lift(std::vector<std::vector<Int>> rows,
                                  std::vector<Int> ideals, Int level) {
  return detail::lift_pipeline(GroupKind::SL, std::move(rows), std::move(ideals),
                               std::move(level));
}

/// Symplectic counterpart of omega_lift with 2k rows of length 2k.
inline LiftCertificate sigma_lift(std::vector<std::vector<Int>> rows,
                                  std::vector<Int> ideals, Int level) {
  return detail::lift_pipeline(GroupKind::SP, std::move(rows), std::move(ideals),
                               std::move(level));
}

/// B = Y * G with Y = Id mod I and G = Id mod J, for B in G_k(Z) and I, J
/// co-maximal: G lifts the matrix that is B mod I and Id mod J.
struct ComplementFactor {
  Matrix<Int> y, g;
};

inline ComplementFactor complement_factor(GroupKind group, const Matrix<Int> &b,
                                          const Int &i_gen, const Int &j_gen) {
  const IntegerRing z;
  if (i_gen.is_zero() || j_gen.is_zero())
    fail(Errc::usc_hypothesis, "complement factorization needs nonzero ideals");
  const IntMod qi(z, i_gen), qj(z, j_gen);
  if (!is_comaximal(qi.ideal(), qj.ideal()))
    fail(Errc::not_comaximal, "ideals are not co-maximal");
  const std::vector<Matrix<Int>> targets{reduce(qi, b), identity(qj, b.rows())};
  const std::vector<IntMod> moduli{qi, qj};
  auto [q, c] = crt_matrix<IntegerRing>(targets, moduli);
  ComplementFactor f;
  if (group == GroupKind::SL) {
    f.g = sap_lift_sl(q, c);
    f.y = multiply(z, b, special_linear_inverse(z, f.g));
  } else {
    f.g = sap_lift_sp(q, c);
    f.y = multiply(z, b, symplectic_inverse(z, f.g));
  }
  return f;
}

} // namespace conglift
