#ifndef HORSESHOE_CERTIFY_HPP
#define HORSESHOE_CERTIFY_HPP

#include <optional>

#include "horseshoe/certificate.hpp"

namespace horseshoe {

struct DissipativeConfig {
    Interval a{3.0};
    Interval b{0.8};
    double b_level = 6.0;
    double epsilon = 0.05;
    std::optional<int> N_override;
    int free_curve_slices = 256; // refined adaptively up to 2^14
    int ring_seeds = 64;         // witness shooting seeds per ring
    int max_backward = 20;       // backward crossing search budget
    int power = 1;               // certify F^power instead of F
};

struct HamiltonianConfig {
    std::string h = "y";
    std::string w = "x";
    double L1 = 1.0;
    double L2 = 5.0;
    int mean_slices = 1 << 19; // mean width feeds every orbit step
    int seed_grid = 1024;      // x-seeds per starting height
    int max_iter = 30;    // forward crossing search budget
    int power = 1;        // certify F^power instead of F
};

// Full pipeline runs. Both return a certificate in every case: on a stage
// failure the verdict is "failed:<stage>: <detail>" and the records
// produced so far are retained for diagnostics.
DissipativeCertificate certify_dissipative(const DissipativeConfig& cfg);
HamiltonianCertificate certify_hamiltonian(const HamiltonianConfig& cfg);

// max backward crossing step over the four witnesses (-1 if absent)
int max_backward_steps(const DissipativeCertificate& c);

struct SweepResult {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string csv() const;
};

// One pipeline run per grid cell; cells run in parallel (capped by
// `threads`, 0 = hardware default) and rows keep grid order. Per-cell
// failures become rows, never abort the sweep.
SweepResult sweep_dissipative(const std::vector<DissipativeConfig>& grid, int threads = 0);
SweepResult sweep_hamiltonian(const std::vector<HamiltonianConfig>& grid, int threads = 0);

} // namespace horseshoe

#endif
