#pragma once

#include <string>

#include "qms/pattern.hpp"

namespace qms {

/// Dimensions of an equation instance: A is m x n, B..D are m x p1..p3,
/// E..G are q1..q3 x n.
struct InstanceDims {
    int m = 0, n = 0, p1 = 0, p2 = 0, p3 = 0, q1 = 0, q2 = 0, q3 = 0;
};

enum class GenMode { raw, consistent_three, consistent_four };

GenMode parse_gen_mode(const std::string& s);  // FormatError on unknown mode
std::string to_string(GenMode mode);

InstanceDims dims_of(const SevenInput& in);

/// Checks the shared row/column counts; FormatError naming the offending
/// fields otherwise.
void validate_dims(const SevenInput& in);

/// JSON file format: {"A": {"rows": m, "cols": n, "entries": [[[a0,a1,a2,a3],
/// ...], ...]}, "B": ..., ..., "G": ...} with every coefficient a rational
/// string "p" or "p/q". Exact round trip, no floating point anywhere.
SevenInput load_instance(const std::string& path);
void save_instance(const std::string& path, const SevenInput& in);

std::string instance_to_json(const SevenInput& in);
SevenInput instance_from_json(const std::string& text);

/// Deterministic generation from a seed. Entries draw quaternion
/// coefficients from {-2..2}; the consistent modes build A from randomly
/// drawn unknowns so the respective equation is solvable by construction.
SevenInput gen_instance(std::uint64_t seed, const InstanceDims& dims, GenMode mode);

}  // namespace qms
