#pragma once

#include "ewtoda/jet.hpp"
#include "ewtoda/fd_check.hpp"
#include "ewtoda/holo.hpp"
#include "ewtoda/sphere.hpp"
#include "ewtoda/tensor.hpp"
#include "ewtoda/weyl3.hpp"
#include "ewtoda/families3.hpp"
#include "ewtoda/monopole.hpp"
#include "ewtoda/curvature4.hpp"
#include "ewtoda/metrics4.hpp"
#include "ewtoda/oracles.hpp"
#include "ewtoda/sampling.hpp"
#include "ewtoda/report.hpp"
#include "ewtoda/suites.hpp"
#include "ewtoda/config.hpp"
