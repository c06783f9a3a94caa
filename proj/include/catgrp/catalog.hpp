#pragma once

#include <vector>

#include "catgrp/group.hpp"

namespace catgrp {

// The desk-scale test catalog: Z1..Z8, Z2xZ2, Z2xZ4, Z2xZ2xZ2, S3, D4, Q8,
// D5 and A4 (even permutations of S4). Built once per process.
const std::vector<GroupRef>& catalog();

// A4 as the kernel of the parity map on S4.
GroupRef make_alternating4();

// Parity homomorphism map S(n) -> Z2 (0 even, 1 odd), tabulated on the
// make_symmetric enumeration.
std::vector<int> symmetric_parity_map(int n);

}  // namespace catgrp
