#pragma once
// Convenience include for the whole library.

#include "flagkey/core.hpp"
#include "flagkey/crystal.hpp"
#include "flagkey/eg.hpp"
#include "flagkey/flagged.hpp"
#include "flagkey/json_io.hpp"
#include "flagkey/polynomial.hpp"
#include "flagkey/tableau.hpp"
#include "flagkey/verify.hpp"
#include "flagkey/weak_eg.hpp"
