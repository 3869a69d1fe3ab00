// SPDX-License-Identifier: MIT
#pragma once

#include <oscirad/certificate.hpp>
#include <oscirad/core.hpp>
#include <oscirad/density.hpp>
#include <oscirad/error.hpp>
#include <oscirad/general_density.hpp>
#include <oscirad/optimal_nodes.hpp>
#include <oscirad/oracle.hpp>
#include <oscirad/oscillatory.hpp>
#include <oscirad/spline_quadrature.hpp>
