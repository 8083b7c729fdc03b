#pragma once

#include "hauscover/check_suite.hpp"
#include "hauscover/coarea.hpp"
#include "hauscover/covering.hpp"
#include "hauscover/generators.hpp"
#include "hauscover/interval_content.hpp"
#include "hauscover/interval_union.hpp"
#include "hauscover/io.hpp"
#include "hauscover/metric_map.hpp"
#include "hauscover/metric_space.hpp"
#include "hauscover/step_function.hpp"
#include "hauscover/version.hpp"
