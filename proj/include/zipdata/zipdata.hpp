#pragma once

#include "zipdata/errors.hpp"
#include "zipdata/subset.hpp"
#include "zipdata/coxeter.hpp"
#include "zipdata/cosets.hpp"
#include "zipdata/zip_datum.hpp"
#include "zipdata/abstract.hpp"
#include "zipdata/nonconnected.hpp"
#include "zipdata/isogeny.hpp"
#include "zipdata/oracle.hpp"
#include "zipdata/io.hpp"
#include "zipdata/verify.hpp"
