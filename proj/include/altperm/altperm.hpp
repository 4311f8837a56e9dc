// Umbrella header.
#pragma once

#include "altperm/exact.hpp"
#include "altperm/formulas.hpp"
#include "altperm/oracle.hpp"
#include "altperm/perms.hpp"
#include "altperm/symfunc.hpp"
#include "altperm/useries.hpp"
#include "altperm/verify.hpp"
