#pragma once

#include "multielo/aggregate.hpp"
#include "multielo/alternatives.hpp"
#include "multielo/core.hpp"
#include "multielo/errors.hpp"
#include "multielo/io.hpp"
#include "multielo/probability.hpp"
#include "multielo/profile.hpp"
#include "multielo/roles.hpp"
#include "multielo/verification.hpp"
