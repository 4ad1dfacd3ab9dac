#pragma once

#include "anth/analysis.hpp"
#include "anth/approximation.hpp"
#include "anth/errors.hpp"
#include "anth/expansion.hpp"
#include "anth/int.hpp"
#include "anth/surd.hpp"
