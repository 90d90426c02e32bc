#pragma once

#include "pskz/padic.hpp"
#include "pskz/mpoly.hpp"
#include "pskz/truncexp.hpp"
#include "pskz/params.hpp"
#include "pskz/certificate.hpp"
#include "pskz/certificate_io.hpp"
#include "pskz/hyper.hpp"
#include "pskz/sl2.hpp"
#include "pskz/qkz.hpp"
#include "pskz/gauge.hpp"
