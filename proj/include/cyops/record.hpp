#pragma once

// Operator-record file format: a line-oriented `[operator]` block with
// `key = value` pairs. P0..Pr hold polynomial expressions in T; id, order
// and degree are structural; anything else is free metadata and survives a
// round trip. serialize() emits the canonical form (expanded polynomials,
// ascending powers), and parse(serialize(r)) == r byte-for-byte.

#include <string>
#include <utility>
#include <vector>

#include "cyops/ratpoly.hpp"
#include "cyops/theta_op.hpp"

namespace cyops {

struct OperatorRecord {
    std::string id;
    int order = 0;
    int degree = 0;
    std::vector<RatPoly> polys;  // P0..Pdegree
    std::vector<std::pair<std::string, std::string>> metadata;

    ThetaOperator to_operator() const { return ThetaOperator(polys); }
    static OperatorRecord from_operator(const ThetaOperator& op, const std::string& id);

    friend bool operator==(const OperatorRecord& a, const OperatorRecord& b);
};

OperatorRecord parse_record(const std::string& text);
std::string serialize_record(const OperatorRecord& rec);

OperatorRecord load_record(const std::string& path);

}  // namespace cyops
