#pragma once

// Umbrella header: exact enumeration of minimal acyclic DFAs, the parking
// function bijection behind it, and the brute-force verification oracle.

#include "madfa/bigcount.hpp"
#include "madfa/census.hpp"
#include "madfa/composition.hpp"
#include "madfa/io.hpp"
#include "madfa/nu_table.hpp"
#include "madfa/oracle.hpp"
#include "madfa/parking.hpp"
#include "madfa/parking_count.hpp"
#include "madfa/parking_enum.hpp"
#include "madfa/right_language.hpp"
#include "madfa/split_merge.hpp"
#include "madfa/weight.hpp"
#include "madfa/zeta.hpp"
