#pragma once

#include "hodgeinf/curve.hpp"
#include "hodgeinf/errors.hpp"
#include "hodgeinf/global_hodge.hpp"
#include "hodgeinf/hodge_table.hpp"
#include "hodgeinf/jconst.hpp"
#include "hodgeinf/local_models.hpp"
#include "hodgeinf/mhs_infinity.hpp"
#include "hodgeinf/rational.hpp"
#include "hodgeinf/report.hpp"
#include "hodgeinf/seifert.hpp"
#include "hodgeinf/spec_io.hpp"
#include "hodgeinf/spectra.hpp"
#include "hodgeinf/spectral_pairs.hpp"
