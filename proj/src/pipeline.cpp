#include "qtwist/pipeline.hpp"

#include <algorithm>

namespace qtwist {

std::shared_ptr<const ClassSet> load_classes(std::int64_t p, const Cache* cache) {
  if (cache) {
    if (auto j = cache->load(p, "classes")) {
      try {
        return std::make_shared<const ClassSet>(class_set_from_json(*j));
      } catch (const std::exception&) {
        // unreadable entry: recompute below
      }
    }
  }
  auto cs = std::make_shared<const ClassSet>(ideal_classes(p));
  if (cache) cache->store(p, "classes", to_json(*cs));
  return cs;
}

FormContext load_form(std::int64_t p, const Cache* cache, const std::vector<std::int64_t>& signature, int threads) {
  FormContext ctx;
  ctx.classes = load_classes(p, cache);
  ctx.brandt = std::make_shared<BrandtModule>(ctx.classes, threads);
  bool loaded = false;
  if (cache) {
    if (auto j = cache->load(p, "eigen")) {
      try {
        ctx.systems = eigensystems_from_json(*j);
        loaded = true;
      } catch (const std::exception&) {
      }
    }
  }
  if (!loaded) {
    ctx.systems = eigensystems(*ctx.brandt, default_split_primes(p));
    if (cache) cache->store(p, "eigen", to_json(ctx.systems));
  }
  ctx.form = signature.empty() ? ctx.systems.front() : select_form(ctx.systems, signature);
  return ctx;
}

DirichletCoeffs load_coeffs(FormContext& ctx, std::int64_t M, const Cache* cache, int threads) {
  const std::int64_t p = ctx.classes->p;
  const std::string key = ctx.form.label;
  if (cache) {
    if (auto j = cache->load(p, "coeffs", key)) {
      try {
        DirichletCoeffs d = coeffs_from_json(*j);
        if (d.M >= M) return d;
      } catch (const std::exception&) {
      }
    }
  }
  DirichletCoeffs d = dirichlet_coeffs(ctx.form, *ctx.brandt, M, threads, &ctx.systems);
  if (cache) cache->store(p, "coeffs", to_json(d), key);
  return d;
}

std::int64_t coefficient_bound(std::int64_t p, std::int64_t d_max, std::int64_t lstar, long double target) {
  std::int64_t m = terms_needed(p, std::max<std::int64_t>(d_max, std::llabs(lstar)), target);
  // p | D gives a smaller conductor, so the largest |D| coprime to p dominates.
  return std::max<std::int64_t>(m, 2);
}

}  // namespace qtwist
