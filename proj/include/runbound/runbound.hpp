#pragma once

#include "runbound/bfile.hpp"
#include "runbound/brute.hpp"
#include "runbound/cache.hpp"
#include "runbound/count.hpp"
#include "runbound/egf.hpp"
#include "runbound/fixtures.hpp"
#include "runbound/format.hpp"
#include "runbound/report.hpp"
#include "runbound/tables.hpp"
#include "runbound/verify.hpp"
