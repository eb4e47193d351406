#pragma once

#include "qmhs/backend.hpp"
#include "qmhs/bipoly.hpp"
#include "qmhs/closedforms.hpp"
#include "qmhs/cyclotomic.hpp"
#include "qmhs/exactnum.hpp"
#include "qmhs/index.hpp"
#include "qmhs/mhs.hpp"
#include "qmhs/multiseries.hpp"
#include "qmhs/ohno_zagier.hpp"
#include "qmhs/parallel.hpp"
#include "qmhs/poly.hpp"
#include "qmhs/report.hpp"
#include "qmhs/xi.hpp"
