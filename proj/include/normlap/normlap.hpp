#pragma once

#include "normlap/bounds.hpp"
#include "normlap/edge_list.hpp"
#include "normlap/error.hpp"
#include "normlap/experiment.hpp"
#include "normlap/generators.hpp"
#include "normlap/graph.hpp"
#include "normlap/majorization.hpp"
#include "normlap/report.hpp"
#include "normlap/root_finding.hpp"
#include "normlap/spectral.hpp"
