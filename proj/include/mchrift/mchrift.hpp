#pragma once

#include "mchrift/airy.hpp"
#include "mchrift/asymptotics.hpp"
#include "mchrift/common.hpp"
#include "mchrift/config.hpp"
#include "mchrift/datum.hpp"
#include "mchrift/experiment.hpp"
#include "mchrift/fft.hpp"
#include "mchrift/io.hpp"
#include "mchrift/linalg.hpp"
#include "mchrift/ode.hpp"
#include "mchrift/painleve2.hpp"
#include "mchrift/pde.hpp"
#include "mchrift/scattering.hpp"
#include "mchrift/soliton.hpp"
