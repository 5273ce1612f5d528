#pragma once

#include "palin/basis.hpp"
#include "palin/coefficient.hpp"
#include "palin/factor_spec.hpp"
#include "palin/families.hpp"
#include "palin/polynomial.hpp"
#include "palin/positivity.hpp"
#include "palin/report.hpp"
#include "palin/scan.hpp"
#include "palin/sturm.hpp"
#include "palin/text.hpp"
