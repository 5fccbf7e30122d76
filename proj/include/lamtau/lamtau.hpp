#pragma once

#include "lamtau/cutsets.hpp"
#include "lamtau/fuzzy.hpp"
#include "lamtau/lambda_tau.hpp"
#include "lamtau/mcsim.hpp"
#include "lamtau/measures.hpp"
#include "lamtau/model.hpp"
#include "lamtau/petri.hpp"
#include "lamtau/report_io.hpp"
#include "lamtau/version.hpp"
