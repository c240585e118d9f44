#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "pathhom/chain.hpp"
#include "pathhom/linalg.hpp"
#include "pathhom/path_complex.hpp"

namespace pathhom {

// Basis of the invariant n-paths: allowed chains whose boundary is allowed.
// Column k of `columns` lives on the allowed basis and has coefficient 1 at
// allowed path free_columns[k] and 0 at the other free columns.
struct OmegaBasis {
  int grade = 0;
  BoundaryMode mode;
  std::vector<Path> allowed;
  SparseMatrix columns;
  std::vector<int> free_columns;

  std::size_t dim() const { return columns.cols(); }
  Chain column_chain(std::size_t k) const;
  std::vector<Chain> chains() const;
};

// Per-grade cache of allowed bases, invariant bases and the boundary map
// between consecutive invariant bases. Grade -1 exists only with
// augmentation. Not thread safe; use one engine per thread.
class OmegaEngine {
 public:
  OmegaEngine(PathComplex p, BoundaryMode mode);
  ~OmegaEngine();
  OmegaEngine(OmegaEngine&&) noexcept;
  OmegaEngine& operator=(OmegaEngine&&) noexcept;

  const PathComplex& complex() const { return p_; }
  BoundaryMode mode() const { return mode_; }

  const OmegaBasis& omega(int n);
  // Boundary from grade n to grade n - 1 in invariant coordinates.
  const SparseMatrix& boundary(int n);
  std::size_t rank_boundary(int n);

  // Invariant coordinates of a chain known to lie in the invariant space.
  SparseVector coordinates(int n, const Chain& c);
  Chain chain_from_coordinates(int n, const SparseVector& coords);
  // Coordinates over the allowed basis; nullopt if c is not allowed.
  std::optional<SparseVector> allowed_coordinates(int n, const Chain& c);

 private:
  struct Grade;
  Grade& grade(int n);
  PathComplex p_;
  BoundaryMode mode_;
  std::vector<std::unique_ptr<Grade>> grades_;  // index n + 1
};

OmegaBasis omega_basis(const PathComplex& p, int n, BoundaryMode mode = {});

enum class EulerStatus { exact, truncated_at_max_dim };

struct GradeSummary {
  int n = 0;
  std::size_t dim_A = 0;
  std::size_t dim_Omega = 0;
  std::size_t rank_boundary = 0;  // dim of the boundary image of this grade
  std::size_t dim_H = 0;
  std::vector<Chain> generators;
};

struct HomologySummary {
  BoundaryMode mode;
  bool reduced = false;
  int max_dim = 0;
  std::vector<GradeSummary> grades;  // from -1 when reduced, else from 0
  long long euler = 0;
  EulerStatus euler_status = EulerStatus::truncated_at_max_dim;
  // First grade from which every invariant space is known to vanish.
  std::optional<int> vanishes_from;
  // Set when the small-dimension rule, rather than a zero space, cut the
  // enumeration short.
  bool early_terminated = false;

  std::vector<std::size_t> betti() const;
  const GradeSummary& at(int n) const;
};

struct HomologyOptions {
  bool early_termination = true;
  bool generators = true;
};

// Reduced homology uses the augmentation on grade 0 whatever mode says.
HomologySummary homology(const PathComplex& p, int max_dim, BoundaryMode mode = {}, bool reduced = false,
                         HomologyOptions options = {});

// dim A_n - dim dA_n - dim(A_n cap dA_(n+1)), computed from ranks of the
// boundary on allowed paths only.
std::size_t homology_via_allowed(const PathComplex& p, int n, BoundaryMode mode = {});

// Dimensions of the quotient of n-forms by the forms vanishing on allowed
// paths plus their differentials, for n = 0..max_dim.
std::vector<std::size_t> cohomology_dims_oracle(const PathComplex& p, int max_dim,
                                                Regularity r = Regularity::regular);

// |P_2| - |semi-edges|.
std::size_t dim_omega2_formula(const DiGraph& g);

struct NoSquaresResult {
  std::size_t dim_omega2;  // number of triangles; every higher grade is 0
};

// Applies when g has no squares and no pair of opposite edges.
std::optional<NoSquaresResult> no_squares_shortcut(const DiGraph& g);

// First grade n with dims[n] == 0, or dims[n] <= 1 in regular mode; every
// grade above it vanishes.
std::optional<int> early_termination_check(const std::vector<std::size_t>& dims_omega, Regularity r);

bool h0_equals_components(const PathComplex& p);

}  // namespace pathhom
