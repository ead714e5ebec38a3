#pragma once

#include "permpat/census.hpp"
#include "permpat/constructions.hpp"
#include "permpat/errors.hpp"
#include "permpat/fingerprint.hpp"
#include "permpat/permutation.hpp"
#include "permpat/report.hpp"
#include "permpat/search.hpp"
#include "permpat/theorem.hpp"
#include "permpat/version.hpp"
