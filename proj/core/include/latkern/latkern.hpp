#pragma once

#include "latkern/errors.hpp"
#include "latkern/factorization.hpp"
#include "latkern/feedback.hpp"
#include "latkern/latency.hpp"
#include "latkern/linalg.hpp"
#include "latkern/matrix.hpp"
#include "latkern/polynomial_modules.hpp"
#include "latkern/poly.hpp"
#include "latkern/proper_bases.hpp"
#include "latkern/ratfun.hpp"
#include "latkern/rational.hpp"
#include "latkern/transfer_matrix.hpp"
