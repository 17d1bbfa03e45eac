// Umbrella header: Lucas/Fibonacci arithmetic, identity and congruence
// verification sweeps, bounded Diophantine solvers, and report serialization.

#pragma once

#include <lucasq/integer.hpp>
#include <lucasq/sequences.hpp>
#include <lucasq/arith.hpp>
#include <lucasq/verify.hpp>
#include <lucasq/solve.hpp>
#include <lucasq/report_io.hpp>
