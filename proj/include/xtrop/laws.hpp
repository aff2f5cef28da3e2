#pragma once

#include "xtrop/generator.hpp"
#include "xtrop/law_report.hpp"
#include "xtrop/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace xtrop {

/// Scalar arithmetic used by the scalar-level laws. Tests swap in mutated
/// operations to confirm that the harness notices a broken rule.
struct ScalarOps {
    Scalar (*add)(const Scalar&, const Scalar&) = &xtrop::add;
    Scalar (*mul)(const Scalar&, const Scalar&) = &xtrop::mul;
};

/// Registered law ids, in registry order:
///   semiring-axioms, freshman, cauchy, diagram, det-transpose,
///   det-row-linearity, identical-rows, det-mult, inverse-iff-regular,
///   products-idempotent, det-inverse, real-projection, val-homomorphism,
///   fast-vs-naive
const std::vector<std::string>& law_ids();

bool is_registered(std::string_view law_id);

/// Per-law defaults (instance count, dimensions, tag mix). Throws UnknownLaw.
GenConfig default_config(std::string_view law_id);

/**
 * Runs `config.count` generated instances of a law, in generation order.
 * Instance k is generated from mix_seed(config.seed ^ mix_seed(k)), which is
 * the seed stored in its report. Some laws prepend fixed worked examples;
 * those reports carry seed 0 and `"source": "worked-example"` in their instance.
 */
std::vector<LawReport> run_law(std::string_view law_id, const GenConfig& config, const ScalarOps& ops = {});

/// Re-runs the single generated instance identified by its report seed.
LawReport run_instance(std::string_view law_id, std::uint64_t instance_seed, const GenConfig& config,
                       const ScalarOps& ops = {});

/**
 * For regular A without nu entries, with I' = A A^nabla and I'' = A^nabla A,
 * checks pi(I' A) = A, pi(A^nabla I') = A^nabla, pi(I'' A^nabla) = A^nabla and
 * pi(A I'') = A. When A^nabla has nu entries the comparison is made between
 * pi-images on both sides. Throws PreconditionFailed otherwise.
 *
 * These identities are not universal: a failing report is a counterexample.
 */
LawReport check_real_projection(const Matrix& a);

struct LawSummary {
    std::string law_id;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

LawSummary summarize(std::string_view law_id, const std::vector<LawReport>& reports);

}  // namespace xtrop
