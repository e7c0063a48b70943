#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evolab/core_geometry.hpp"
#include "evolab/pairing_spectrum.hpp"

namespace evolab
{

//---------------------------------------------------------------------------//
// Verification suites shared by `evolab verify` and the acceptance binary.
// Each suite draws its instances from the seed, so a result is reproducible
// from (suite, config).
//---------------------------------------------------------------------------//
struct SuiteConfig
{
    std::uint64_t seed = 1;
    int trials = 100;
    std::optional<int> m;
    std::optional<int> n;
    int steps = 60;
    Tolerances tol;
};

struct SuiteResult
{
    std::string name;
    bool passed = false;
    std::string summary;
    std::map<std::string, double> metrics;
    double seconds = 0;
};

//! Second-evolute matrix is scalar for n = m + 2.
SuiteResult verify_pentagon(SuiteConfig const& cfg);
//! E^3 and E are collinear for n = m + 3.
SuiteResult verify_hexagon(SuiteConfig const& cfg);
//! Eigenvalue pairing and zero eigenvalues; also records the skew-Hamiltonian residual.
SuiteResult verify_spectrum(SuiteConfig const& cfg);
//! Translation invariance, antisymmetry, <P, E P> = 0 and conditioning of G.
SuiteResult verify_pairing(SuiteConfig const& cfg);
//! involute(evolute(P)) = P for n - m even; NoFixedPoint for n - m odd.
SuiteResult verify_involute(SuiteConfig const& cfg);
//! Parametric identities of spacial hypocycloids.
SuiteResult verify_hypocycloid(SuiteConfig const& cfg);
//! Curve pairing laws on seeded profiles.
SuiteResult verify_curves(SuiteConfig const& cfg);

//---------------------------------------------------------------------------//
struct IterationInstance
{
    std::uint64_t seed = 0;
    SphericalPolygon v;
    VertexPolygon p0;
    SpectrumReport report;
    double ratio = 0;  //!< subdominant modulus / dominant modulus
};

/*!
 * First seed >= start whose (m, n) configuration has a real dominant
 * eigenvalue of the requested sign with modulus ratio in [min_ratio, max_ratio].
 */
IterationInstance find_iteration_instance(int m,
                                          int n,
                                          std::uint64_t start,
                                          DominantClass want,
                                          double min_ratio,
                                          double max_ratio,
                                          int max_tries = 2000);

//! Convergence of normalized evolutes to the dominant eigenvector.
SuiteResult verify_iteration(IterationInstance const& inst, int steps);

std::vector<std::string> suite_names();
//! Dispatch by name; throws InvalidParameter for an unknown suite.
SuiteResult run_suite(std::string const& name, SuiteConfig const& cfg);

}  // namespace evolab
