// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Umbrella header.

#include "lce/baseline.hpp"
#include "lce/bench.hpp"
#include "lce/common.hpp"
#include "lce/dc.hpp"
#include "lce/derand.hpp"
#include "lce/det.hpp"
#include "lce/dump.hpp"
#include "lce/fingerprint.hpp"
#include "lce/mc.hpp"
#include "lce/modular.hpp"
#include "lce/nearby.hpp"
#include "lce/packed_vector.hpp"
#include "lce/structures.hpp"
#include "lce/suffix_array.hpp"
#include "lce/text.hpp"
#include "lce/verify.hpp"
