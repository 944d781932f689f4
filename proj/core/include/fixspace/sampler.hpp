#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fixspace/forms.hpp"
#include "fixspace/group.hpp"
#include "fixspace/matrix.hpp"
#include "fixspace/rational.hpp"
#include "fixspace/rng.hpp"

namespace fixspace {

inline constexpr std::uint64_t kEnumerationCap = 20000;

class EnumerationLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Uniform invertible n x n matrix, built row by row with each row drawn
/// uniformly outside the span of the previous rows.
[[nodiscard]] FqMatrix sample_gl(int n, const FieldPtr& field, Rng& rng);

/// Uniform isometry of form. Column i is drawn uniformly from the affine space
/// cut out by the pairings with columns 0..i-1, rejecting draws that break the
/// diagonal Gram entry or fall in the span of the earlier columns.
[[nodiscard]] FqMatrix sample_isometry(const FormSpec& form, Rng& rng);

/// Concrete matrix group for a GroupSpec: its field, form and natural module.
class GroupModel {
public:
    /// Throws std::invalid_argument for even-characteristic orthogonal groups.
    explicit GroupModel(const GroupSpec& spec);

    [[nodiscard]] const GroupSpec& spec() const { return spec_; }
    [[nodiscard]] const FormSpec& form() const { return form_; }
    [[nodiscard]] const FieldPtr& field() const { return form_.gram.field(); }
    [[nodiscard]] std::size_t dimension() const { return form_.gram.rows(); }

    [[nodiscard]] FqMatrix sample(Rng& rng) const;

    /// Every element exactly once, in a deterministic order. Throws
    /// EnumerationLimitError if the group order exceeds cap.
    [[nodiscard]] std::vector<FqMatrix> enumerate(std::uint64_t cap = kEnumerationCap) const;

private:
    GroupSpec spec_;
    FormSpec form_;
};

[[nodiscard]] std::vector<FqMatrix> enumerate_group(const GroupSpec& spec,
                                                    std::uint64_t cap = kEnumerationCap);

/// True when the spec has a matrix model here and its order is at most cap.
[[nodiscard]] bool is_enumerable(const GroupSpec& spec, std::uint64_t cap = kEnumerationCap);

/// Histogram of fixed_space_dim over the whole group divided by its order.
[[nodiscard]] std::vector<Rational> enumerated_fixdist(const GroupSpec& spec,
                                                       std::uint64_t cap = kEnumerationCap);

/// Literal average of (number of fixed vectors)^j over the enumerated group.
[[nodiscard]] Rational oracle_moment_enumerate(const GroupSpec& spec, long j,
                                               std::uint64_t cap = kEnumerationCap);

struct SampleReport {
    GroupSpec spec;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::vector<std::uint64_t> counts;  ///< indexed by fixed-space dimension
    std::vector<Rational> exact;        ///< exact probabilities, same indexing
    double max_abs_dev = 0.0;
    double chi_square = 0.0;
    int degrees_of_freedom = 0;
    /// Every cell satisfies |freq - p| < 5 sqrt(p(1-p)/trials).
    bool within_tolerance = false;
};

/// Tolerance 5 sqrt(p(1-p)/trials) used for each cell.
[[nodiscard]] double cell_tolerance(double p, std::uint64_t trials);

/// Samples trials elements split over workers (worker w uses Rng::stream(seed, w) and
/// the first trials % workers workers take one extra trial). Deterministic for fixed
/// (spec, trials, seed, workers). Throws std::invalid_argument if trials == 0.
[[nodiscard]] SampleReport empirical_fixdist(const GroupSpec& spec, std::uint64_t trials,
                                             std::uint64_t seed, unsigned workers = 1);

struct UniformityReport {
    GroupSpec spec;
    std::uint64_t order = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> counts;  ///< per enumerated element
    double chi_square = 0.0;
    int degrees_of_freedom = 0;
    double chi_square_limit = 0.0;  ///< dof + 5 sqrt(2 dof)
    double max_abs_z = 0.0;
    bool passed = false;
};

/// Chi-square of sampled element counts against the uniform law on the enumerated group.
[[nodiscard]] UniformityReport sampler_uniformity(const GroupSpec& spec, std::uint64_t trials,
                                                  std::uint64_t seed, unsigned workers = 1);

}  // namespace fixspace
