#ifndef HORSESHOE_CERTIFICATE_HPP
#define HORSESHOE_CERTIFICATE_HPP

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "horseshoe/dpn.hpp"

namespace horseshoe {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

// pr2(F(x, level)) over all x in [0,1], proving the image of the boundary
// circle stays strictly inside the band
struct FreeCurveRecord {
    double level = 0.0;
    int slices = 256;
    Interval image_y;
};

struct WitnessRecord {
    double px = 0.0, py = 0.0; // validated witness point (segment endpoint)
    OrbitEnclosure orbit;      // rigorous backward orbit from the witness
    int crossing_step = -1;
    Side side = Side::Above;
};

struct DissipativeCertificate {
    Interval a, b;
    int power = 1; // certified map is F^power
    double b_level = 6.0;
    int rho = 0, N = 0;
    FixedPointCert c0, c1;
    bool has_fixed_points = false;
    std::array<FreeCurveRecord, 2> free_curves;
    bool has_free_curves = false;
    std::array<PointArray, 4> segments;
    std::array<WitnessRecord, 4> witnesses;
    bool has_witnesses = false;
    DpnRecord dpn;
    bool has_dpn = false;
    std::string verdict; // "certified" or "failed:<stage>: <detail>"
    std::string timestamp;
};

struct HamiltonianCertificate {
    std::string h_str, w_str;
    int power = 1; // certified map is F^power
    int mean_slices = 4096;
    Interval mean;
    double L1 = 1.0, L2 = 5.0;
    int rho = 0, c_coeff = 0;
    double NL2_bound = 0.0;
    FixedPointCert c0, c1;
    bool has_fixed_points = false;
    Interval ineq_lhs, ineq_rhs; // L2 >= L1 + c_coeff * NL2
    bool has_inequality = false;
    OrbitEnclosure crossing;
    int below_step = -1, above_step = -1;
    bool has_crossing = false;
    std::string assumption;
    std::string verdict;
    std::string timestamp;
};

nlohmann::ordered_json to_json(const Interval& x);
nlohmann::ordered_json to_json(const IBox& b);
nlohmann::ordered_json to_json(const FixedPointCert& c);
nlohmann::ordered_json to_json(const OrbitEnclosure& o);
nlohmann::ordered_json to_json(const DissipativeCertificate& c);
nlohmann::ordered_json to_json(const HamiltonianCertificate& c);

Interval interval_from_json(const nlohmann::ordered_json& j);
IBox box_from_json(const nlohmann::ordered_json& j);
FixedPointCert fixed_point_from_json(const nlohmann::ordered_json& j);
OrbitEnclosure orbit_from_json(const nlohmann::ordered_json& j);
DissipativeCertificate dissipative_from_json(const nlohmann::ordered_json& j);
HamiltonianCertificate hamiltonian_from_json(const nlohmann::ordered_json& j);

struct SchemaMismatch : Error {
    explicit SchemaMismatch(const std::string& msg) : Error(msg) {}
};

// Re-validates every stored inequality and containment of a serialized
// certificate; deterministic recomputation only, no searches. Returns the
// list of violated records (empty means the certificate checks out).
std::vector<std::string> recheck(const nlohmann::ordered_json& cert);

} // namespace horseshoe

#endif
