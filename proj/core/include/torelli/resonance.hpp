#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <tuple>
#include <string>
#include <vector>

#include "torelli/budget.hpp"
#include "torelli/linalg.hpp"
#include "torelli/slnrep.hpp"

namespace torelli {

/// Co-restricted cup product Λ²H¹ -> H². Column p is the image of the p-th
/// pair e_a∧e_b (a < b, lexicographic order).
struct CupData {
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  std::vector<QVector> columns;

  static CupData zero(std::size_t h1);  // free group data
  linalg::RatMatrix matrix() const;      // h2 x C(h1, 2)
  void validate() const;
};

/// Columns of λ_z: u = e_b -> z∪e_b, as h1 vectors in H².
std::vector<QVector> lambda_columns(const CupData& c, const QVector& z);

/// dim ker λ_z. A modular rank (p = 2^61 - 1) settles the common full-rank
/// case exactly, since rank mod p never exceeds the rational rank; otherwise
/// the rational rank is computed.
std::size_t lambda_kernel_dim(const CupData& c, const QVector& z);

/// Exact rational rank of a list of vectors.
std::size_t exact_rank(const std::vector<QVector>& vectors, std::size_t dim);

/// z in R(G): some u outside Q·z has z∪u = 0. For z = 0 this is read
/// literally: member iff h1 >= 2.
bool resonance_membership(const CupData& c, const QVector& z);

/// All data of the OA_n computation.
struct OanData {
  std::size_t n = 0;
  RepSpace V;
  RepSpace L2;  // Λ²V
  QVector v0;   // in V coordinates
  Weight lambda, mu;
  std::size_t maximal_space_dim = 0;  // maximal vectors of V
  std::size_t u0_space_dim = 0;       // maximal vectors of Λ²V of weight μ
  QVector u0;
  linalg::EchelonBasis<Rational> K;
  bool K_from_cache = false;
  bool ad_star_kills_v0 = false;
  bool raising_kill_v0 = false;
  bool weight_v0_is_lambda = false;
  bool v0_generates_V = false;
  CupData cup;
};

constexpr std::size_t kMaxOanRank = 5;

/// H¹ = V, H² = Λ²V/K with K the submodule generated by u0; the cup product
/// is the projection. n in {4, 5}. `cache_dir` (if nonempty) stores the K
/// basis under a content-addressed name.
OanData oan_cup_data(std::size_t n, const Budget& budget = Budget::unlimited(), const std::string& cache_dir = {});

struct SamplingReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t hits = 0;
};

/// Coordinates (draw % (2h+1)) - h from mt19937_64 draws, one per coordinate
/// in order; the whole vector is redrawn while it is zero.
QVector sample_vector(std::size_t dim, std::mt19937_64& rng, int height = 3);

/// Random seeded points, counting resonance members.
SamplingReport sample_resonance(const CupData& c, std::uint64_t seed, std::size_t trials,
                                const Budget& budget = Budget::unlimited());

struct ResonanceCertificate {
  std::size_t n = 0;
  std::size_t dimV = 0;
  std::size_t dimK = 0;
  std::size_t weyl_dim_mu = 0;
  std::size_t dim_wedge2V = 0;
  std::size_t dimH2 = 0;
  Weight weight_v0, lambda, mu;
  std::size_t maximal_space_dim = 0;
  std::size_t u0_space_dim = 0;
  bool ad_star_kills_v0 = false;
  bool raising_kill_v0 = false;
  bool weight_v0_is_lambda = false;
  bool v0_generates_V = false;
  bool K_from_cache = false;
  std::size_t ker_lambda_v0_dim = 0;
  std::string verdict = "inconclusive";  // vanishing | nonvanishing | inconclusive
  std::string failure_stage;             // empty unless a stage failed
  std::string failure_detail;
  bool failure_is_resource_limit = false;
  std::vector<std::string> reasoning;
  std::optional<SamplingReport> sampling;
  double seconds = 0;
};

/// Runs the full chain for n in {4, 5}; resource failures produce a partial
/// certificate with failure_stage set rather than an exception.
ResonanceCertificate certify_vanishing_oan(std::size_t n, std::uint64_t seed, std::size_t trials,
                                           const Budget& budget = Budget::unlimited(),
                                           const std::string& cache_dir = {});

/// Presentation of the infinitesimal Alexander invariant:
/// S⊗Λ³H ⊕ S⊗H₂ -> S⊗Λ²H with δ3 + id⊗∂.
struct BinfPresentation {
  std::size_t h = 0;
  std::size_t h2 = 0;
  linalg::RatMatrix partial;        // C(h,2) x h2, column j = ∂(j-th basis vector of H₂)
  std::vector<QVector> annihilator;  // basis of (im ∂)^⊥ ⊂ (Λ²H)*, the dual of Λ²H / im ∂
};

BinfPresentation binf_presentation(std::size_t h, const linalg::RatMatrix& partial);

/// ∂ = transpose of the cup product.
BinfPresentation binf_from_cup(const CupData& c);

/// δ3(x∧y∧z) = x⊗y∧z - y⊗x∧z + z⊗x∧y as (H index, pair index, sign) terms.
std::vector<std::tuple<std::size_t, std::size_t, int>> delta3(std::size_t h, std::size_t i, std::size_t j,
                                                               std::size_t k);

/// Number of degree-d monomials in h variables.
std::size_t monomial_count(std::size_t h, std::size_t d);

std::size_t binf_graded_dim(const BinfPresentation& p, std::size_t q, const Budget& budget = Budget::unlimited());

struct BinfTotal {
  bool finite = false;
  std::size_t total = 0;           // valid when finite
  std::vector<std::size_t> dims;   // dims[k] is the piece of degree k + 2
  std::size_t cap = 0;
};

/// Sums graded pieces from degree 2. The module is generated in degree 2, so
/// 𝔅_{q+1} = S_1 · 𝔅_q and a zero piece forces all later pieces to vanish.
BinfTotal binf_total_dim(const BinfPresentation& p, std::size_t cap, const Budget& budget = Budget::unlimited());

constexpr std::size_t kMaxHolonomyDegree = 4;

/// dims h_1..h_q of the holonomy Lie algebra Lie(H)/⟨im ∂⟩.
std::vector<std::size_t> holonomy_bracket_dims(const BinfPresentation& p, std::size_t q);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& data);

}  // namespace torelli
