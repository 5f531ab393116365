#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ttp/linalg.hpp"
#include "ttp/model.hpp"

namespace ttp {

struct Claim {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
    double millis = 0.0;
};

struct Report {
    std::vector<Claim> claims;

    bool all_pass() const;
    void append(Report other);
};

void print_report(const Report& r, std::ostream& out);
void write_report_json(const Report& r, const std::string& path);

/// Streams the vertex generators of the play/travel polytope for n = 4:
/// each tournament's (play, travel) point followed by every single
/// travel-coordinate augmentation. Stops early when the visitor returns
/// false.
void for_each_polytope_point(int n, const std::function<bool(std::span<const std::uint8_t>)>& visit);

/// Structure equations (one-match-per-team rows for slots >= 2 and
/// pair-meets-once rows) as an integer matrix over the full variable space.
IntMatrix structure_equations(int n);

/// Checks that the play columns with slot == pivot_slot, home == 1 or pair
/// (2,3) form a square invertible submatrix of the structure equations.
bool basis_columns_invertible(int n, int pivot_slot);

/// True iff appending the slot-1 team rows leaves the equation rank
/// unchanged, i.e. they are linear consequences.
bool slot1_equations_redundant(int n);

struct PolytopeDimensionResult {
    long dim = -1;
    long equation_rank = 0;
    long points_streamed = 0;
};
PolytopeDimensionResult polytope_dimension(int n);

/// A face given by rows that must hold with equality, plus columns known to
/// vanish on the face (each justified by a dominating valid inequality;
/// they sharpen the rank-based upper bound).
struct FaceSpec {
    std::string name;
    std::vector<Row> tight_rows;
    std::vector<int> forced_zero_columns;
    long claimed_dim = -1;
};

struct FaceDimensionResult {
    long dim = -1;         // affine dimension of the on-face points (-1: empty)
    long upper_bound = 0;  // ambient minus rank of equations + tight rows + zeros
    long onface_points = 0;
    long points_streamed = 0;
};
/// Exact two-sided computation: the upper bound comes from an exact rank,
/// the lower bound from exactly independent point differences. Throws
/// logic_error if a streamed point violates a tight row (invalid face).
FaceDimensionResult face_dimension(int n, const FaceSpec& spec);

struct FlowFaceResult {
    bool pass = false;
    long onface_points = 0;
    long expected_points = 0;
};
/// The face where all venue-flow equations hold: exactly the points whose
/// travel part is the true travel vector, one per tournament.
FlowFaceResult verify_flow_equation_face(int n);

struct VerifyOptions {
    bool all_tuples = false;
    int tuples_per_class = 3;
    std::string inject_fault;  // face name to corrupt; negative-control hook
};

Report verify_dimension(const VerifyOptions& opt = {});
Report verify_basis(const VerifyOptions& opt = {});
Report verify_redundancy(const VerifyOptions& opt = {});
Report verify_facets(const VerifyOptions& opt = {});
Report verify_face_flow_equations(const VerifyOptions& opt = {});
Report verify_all(const VerifyOptions& opt = {});

}  // namespace ttp
