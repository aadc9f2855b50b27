#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "ripcert/graph.hpp"
#include "ripcert/rng.hpp"

namespace ripcert::testing {

// Cycle C_n (d = 2).
graph::RegularGraph make_cycle(int n);

// Complete graph K_n (d = n - 1).
graph::RegularGraph make_complete(int n);

// Two disjoint copies of K_4 on 8 vertices (d = 3, disconnected).
graph::RegularGraph make_two_k4s();

// Petersen graph (n = 10, d = 3, connected, vertex-transitive).
graph::RegularGraph make_petersen();

bool is_connected(const graph::RegularGraph& g);

// Random vector with `support_size` nonzero entries drawn from (-1, 1) \ {0}.
Eigen::VectorXd random_sparse_vector(int n, int support_size, Rng& rng);

}  // namespace ripcert::testing
