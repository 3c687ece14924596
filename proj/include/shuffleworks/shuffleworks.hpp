#pragma once

#include "shuffleworks/errors.hpp"
#include "shuffleworks/involution_factor.hpp"
#include "shuffleworks/network.hpp"
#include "shuffleworks/oracle.hpp"
#include "shuffleworks/permutation.hpp"
#include "shuffleworks/record_file.hpp"
#include "shuffleworks/shuffle.hpp"
#include "shuffleworks/shuffle_bitrev.hpp"
#include "shuffleworks/shuffle_modinv.hpp"
