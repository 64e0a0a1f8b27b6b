#pragma once

#include "eres/blowup.hpp"
#include "eres/core.hpp"
#include "eres/eorder.hpp"
#include "eres/gamma.hpp"
#include "eres/io.hpp"
#include "eres/mobile.hpp"
#include "eres/numeric.hpp"
#include "eres/oracle.hpp"
#include "eres/resolver.hpp"
