#pragma once

#include "conglift/error.hpp"
#include "conglift/lifting/certificate.hpp"
#include "conglift/projspace/projspace.hpp"
#include "conglift/sampling.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace conglift {

struct SurjectivityReport {
  GroupKind group = GroupKind::SL;
  std::size_t k = 0;
  std::vector<Int> ideals;
  Int level;
  std::vector<WeightVector> weights;
  std::vector<std::uint64_t> class_counts; // |PF| per row
  std::uint64_t product_size = 0;          // saturates at UINT64_MAX
  bool exhaustive = true;
  std::optional<std::uint64_t> seed;
  std::uint64_t attempted = 0;
  std::uint64_t verified = 0;
  std::vector<LiftCertificate> certificates;

  bool verdict() const { return attempted > 0 && verified == attempted; }
};

namespace detail {

inline std::vector<ProjPoint<IntegerRing>> row_classes(const Int &g, const WeightVector &w,
                                                       std::size_t n) {
  const IntegerRing z;
  const Ideal<IntegerRing> ideal(z, g);
  if (ideal.is_unit()) {
    std::vector<Int> e(n, Int(0));
    e[0] = 1;
    return {ProjPoint<IntegerRing>{ideal, w, std::move(e), true}};
  }
  return enumerate_pf(ideal, w);
}

} // namespace detail

/// Lifts targets from the product of PF^{w_i}_{I_i} through omega_lift or
/// sigma_lift: every target when `samples` is empty, otherwise that many
/// seeded uniform draws.
inline SurjectivityReport surjectivity_run(GroupKind group, std::size_t k,
                                           std::vector<Int> ideals, Int level,
                                           std::vector<WeightVector> weights,
                                           std::optional<std::uint64_t> samples = {},
                                           std::uint64_t seed = 0,
                                           std::uint64_t guard = 100'000) {
  const std::size_t n = group_dimension(group, k);
  if (k == 0) fail(Errc::invalid_argument, "rank k must be at least 1");
  if (ideals.size() != n)
    fail(Errc::shape_mismatch, "need " + std::to_string(n) + " ideals, got " +
                                   std::to_string(ideals.size()));
  if (weights.size() == 1) weights.assign(n, weights.front());
  if (weights.size() != n)
    fail(Errc::shape_mismatch, "need one weight row per ideal");
  for (const auto &w : weights)
    if (w.size() != n)
      fail(Errc::shape_mismatch, "weight rows must have length " + std::to_string(n));
  for (auto &g : ideals) {
    if (g.is_zero())
      fail(Errc::usc_hypothesis, "ideal <0> fails the unital set condition in Z");
    g = abs(g);
  }

  SurjectivityReport rep;
  rep.group = group;
  rep.k = k;
  rep.ideals = ideals;
  rep.level = abs(level);
  rep.weights = weights;

  std::vector<std::vector<ProjPoint<IntegerRing>>> classes;
  rep.product_size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    classes.push_back(detail::row_classes(ideals[i], weights[i], n));
    const std::uint64_t c = classes.back().size();
    rep.class_counts.push_back(c);
    rep.product_size = rep.product_size > UINT64_MAX / c ? UINT64_MAX : rep.product_size * c;
  }

  auto lift = [&](const std::vector<std::size_t> &choice) {
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(classes[i][choice[i]].rep);
    auto cert = group == GroupKind::SL ? omega_lift(rows, ideals, rep.level)
                                       : sigma_lift(rows, ideals, rep.level);
    ++rep.attempted;
    if (verify_certificate(cert)) ++rep.verified;
    rep.certificates.push_back(std::move(cert));
  };

  std::vector<std::size_t> choice(n, 0);
  if (!samples) {
    if (rep.product_size > guard)
      fail(Errc::guard_exceeded, "PF product has " + std::to_string(rep.product_size) +
                                     " targets, above guard " + std::to_string(guard));
    for (std::uint64_t t = 0; t < rep.product_size; ++t) {
      lift(choice);
      for (std::size_t i = n; i-- > 0;) {
        if (++choice[i] < classes[i].size()) break;
        choice[i] = 0;
      }
    }
  } else {
    if (*samples > guard)
      fail(Errc::guard_exceeded, "sample count above guard " + std::to_string(guard));
    rep.exhaustive = false;
    rep.seed = seed;
    Sampler rng(seed);
    for (std::uint64_t t = 0; t < *samples; ++t) {
      for (std::size_t i = 0; i < n; ++i) choice[i] = rng.below(classes[i].size());
      lift(choice);
    }
  }
  return rep;
}

} // namespace conglift
