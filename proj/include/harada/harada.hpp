#pragma once

// Umbrella header.

#include "harada/error.hpp"
#include "harada/bignum.hpp"
#include "harada/cyclotomic.hpp"
#include "harada/matrix.hpp"
#include "harada/group.hpp"
#include "harada/conjugacy.hpp"
#include "harada/families.hpp"
#include "harada/class_algebra.hpp"
#include "harada/characters.hpp"
#include "harada/central.hpp"
#include "harada/oracle.hpp"
#include "harada/verify.hpp"
#include "harada/spec_text.hpp"
#include "harada/report.hpp"
#include "harada/cli.hpp"
