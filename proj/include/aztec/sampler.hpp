// Exact sequential sampling of particle systems (and hence uniform tilings)
// through the determinant structure of the line conditionals, top-down from
// the forced full top line.  Exact mode certifies every draw: the product of
// per-line conditional probabilities equals the closed-form joint law.
#pragma once

#include <optional>

#include "aztec/detail/line_kernel.hpp"
#include "aztec/half.hpp"
#include "aztec/rng.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

enum class SampleMode { exact, logfloat };

// Measured reliability limits of the floating-point conditional chain (the
// mass-sum drift alarm fires beyond these orders even at quad precision);
// larger orders are served by shuffle_tiling and sample_half_line.
inline constexpr int kLogfloatMaxOrder = 96;
inline constexpr int kLogfloatMaxHalfOrder = 56;

struct SystemSample {
  ParticleSystem system;
  BigRat probability;  // product of conditionals (exact mode; 0 otherwise)
  SamplerStats stats;
};

struct HalfSystemSample {
  HalfParticleSystem system;
  BigRat probability;
  SamplerStats stats;
};

// Exact conditional probability of `lower` below `upper` for the given step,
// evaluated through the sequential kernel (0 when incompatible).
BigRat step_conditional(StepKind kind, std::span<const int> upper,
                        std::span<const int> lower);

// Draws the line below `upper` from the diamond-step conditional, exactly.
LineConfig sample_line(const LineConfig& upper, RngStream& rng,
                       BigRat* probability = nullptr);

// Full chain, lines N down to 1 from the forced top line (N, ..., 0).
// Exact mode is refused above exact_max_order (cost), use logfloat there.
SystemSample sample_system(int N, RngStream& rng,
                           SampleMode mode = SampleMode::exact,
                           int exact_max_order = 64);

// Uniform tiling: sampled system plus one fair bit per free particle.
DominoTiling sample_tiling(int N, RngStream& rng,
                           SampleMode mode = SampleMode::exact);

// Half-diamond chain, lines 2M down to 1 from the forced full line
// (M+1, ..., 1), alternating growth and equal-length conditionals.
HalfSystemSample sample_half(int M, RngStream& rng,
                             SampleMode mode = SampleMode::exact,
                             int exact_max_order = 64);

// Table-lookup oracle samplers (exhaustive enumeration, small order only).
ParticleSystem sample_bruteforce(int N, RngStream& rng);
HalfParticleSystem sample_half_bruteforce(int M, RngStream& rng);

// Uniform tiling by growth shuffling: integer-only, exact at any order, used
// for large-order Monte Carlo.  Cross-validated against the table oracle and
// the conditional chain at small order; never the correctness reference.
DominoTiling shuffle_tiling(int order, RngStream& rng);

// One hole line of the half diamond drawn from its exact one-line law, which
// is a determinantal projection ensemble in the squared shifted variable.
// Works at any order; cross-validated against half_one_line_pdf.
LineConfig sample_half_line(int line, int M, RngStream& rng);

}  // namespace aztec
