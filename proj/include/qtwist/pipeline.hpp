#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qtwist/cache.hpp"
#include "qtwist/lvalue.hpp"

namespace qtwist {

/// Class set, Brandt module and rational eigenforms for one level, cache-backed.
struct FormContext {
  std::shared_ptr<const ClassSet> classes;
  std::shared_ptr<BrandtModule> brandt;
  std::vector<EigenSystem> systems;
  EigenSystem form;  // the selected eigenform
};

std::shared_ptr<const ClassSet> load_classes(std::int64_t p, const Cache* cache);

/// `signature` selects by leading eigenvalues at the split primes; empty picks the first system.
FormContext load_form(std::int64_t p, const Cache* cache, const std::vector<std::int64_t>& signature = {},
                      int threads = 1);

/// Coefficients a(1..M) for ctx.form.
DirichletCoeffs load_coeffs(FormContext& ctx, std::int64_t M, const Cache* cache, int threads = 1);

/// Enough coefficients for every |D| <= d_max and for l*.
std::int64_t coefficient_bound(std::int64_t p, std::int64_t d_max, std::int64_t lstar, long double target);

}  // namespace qtwist
