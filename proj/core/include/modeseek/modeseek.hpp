#pragma once

#include "modeseek/bandwidth.hpp"
#include "modeseek/imaging.hpp"
#include "modeseek/kernels.hpp"
#include "modeseek/layout.hpp"
#include "modeseek/meanshift.hpp"
#include "modeseek/partition.hpp"
#include "modeseek/point_set.hpp"
#include "modeseek/selection.hpp"
#include "modeseek/stability.hpp"
#include "modeseek/threading.hpp"
#include "modeseek/trajectory.hpp"
