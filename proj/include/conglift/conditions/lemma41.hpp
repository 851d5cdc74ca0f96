#pragma once

#include "conglift/error.hpp"
#include "conglift/lifting/certificate.hpp"
#include "conglift/lifting/sap_lift.hpp"
#include "conglift/matgroup/enumerate.hpp"
#include "conglift/sampling.hpp"

#include <cstdint>

namespace conglift {

/// Finite-level evidence that the principal congruence subgroups of
/// co-maximal I, J intersect in Gamma(IJ) and multiply to the whole group.
struct Lemma41Report {
  GroupKind group = GroupKind::SL;
  std::size_t k = 0;
  Int i_gen, j_gen;
  std::uint64_t order_ij = 0, order_i = 0, order_j = 0;
  std::uint64_t samples = 0;
  std::uint64_t intersection_ok = 0;  // (B in Gamma(I) and Gamma(J)) <=> B in Gamma(IJ)
  std::uint64_t factorization_ok = 0; // B = Y G, Y in Gamma(I), G in Gamma(J)
  bool identity_in_all = false;

  bool order_identity() const { return order_ij == order_i * order_j; }
  bool verdict() const {
    return order_identity() && identity_in_all && intersection_ok == samples &&
           factorization_ok == samples;
  }
};

inline bool in_congruence_subgroup(const Matrix<Int> &b, const Int &level) {
  const IntMod q(IntegerRing{}, level);
  return reduce(q, b) == identity(q, b.rows());
}

/// Checks one sampled B: intersection equivalence and the complement
/// factorization. Returns (intersection ok, factorization ok).
inline std::pair<bool, bool> lemma41_sample(GroupKind group, const Matrix<Int> &b,
                                            const Int &i_gen, const Int &j_gen) {
  const IntegerRing z;
  const bool in_i = in_congruence_subgroup(b, i_gen);
  const bool in_j = in_congruence_subgroup(b, j_gen);
  const bool in_ij = in_congruence_subgroup(b, i_gen * j_gen);
  const auto f = complement_factor(group, b, i_gen, j_gen);
  const bool member = group == GroupKind::SL
                          ? det(z, f.y) == 1 && det(z, f.g) == 1
                          : is_symplectic(z, f.y) && is_symplectic(z, f.g);
  const bool fact = member && in_congruence_subgroup(f.y, i_gen) &&
                    in_congruence_subgroup(f.g, j_gen) && multiply(z, f.y, f.g) == b;
  return {(in_i && in_j) == in_ij, fact};
}

/// Orders are computed by enumeration (|G(Z/IJ)| = |G(Z/I)| |G(Z/J)|);
/// samples are integral lifts of uniformly drawn elements of G(Z/IJ).
inline Lemma41Report lemma41_check(GroupKind group, std::size_t k, const Int &i_gen,
                                   const Int &j_gen, std::uint64_t samples,
                                   std::uint64_t seed, std::uint64_t guard = 5'000'000) {
  const IntegerRing z;
  if (k == 0) fail(Errc::invalid_argument, "rank k must be at least 1");
  const Int ia = abs(i_gen), ja = abs(j_gen);
  if (ia < 2 || ja < 2)
    fail(Errc::invalid_argument, "ideals must be proper and nonzero");
  if (!z.is_unit(gcd(z, ia, ja)))
    fail(Errc::not_comaximal, "ideals " + ia.str() + " and " + ja.str() +
                                  " are not co-maximal");
  Lemma41Report rep;
  rep.group = group;
  rep.k = k;
  rep.i_gen = ia;
  rep.j_gen = ja;
  const IntMod qij(z, ia * ja);
  const auto elements = enumerate_group(qij, group, k, guard);
  rep.order_ij = elements.size();
  rep.order_i = enumerate_group(IntMod(z, ia), group, k, guard).size();
  rep.order_j = enumerate_group(IntMod(z, ja), group, k, guard).size();

  const auto id = identity(z, group_dimension(group, k));
  rep.identity_in_all = in_congruence_subgroup(id, ia) && in_congruence_subgroup(id, ja) &&
                        in_congruence_subgroup(id, ia * ja);

  Sampler rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto &a = elements[rng.below(elements.size())];
    const auto b = group == GroupKind::SL ? sap_lift_sl(qij, a) : sap_lift_sp(qij, a);
    auto [inter, fact] = lemma41_sample(group, b, ia, ja);
    ++rep.samples;
    if (inter) ++rep.intersection_ok;
    if (fact) ++rep.factorization_ok;
  }
  return rep;
}

} // namespace conglift
