#pragma once

#include "bitword.hpp"
#include "blocks.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "sequence.hpp"
