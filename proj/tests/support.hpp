#pragma once

#include <string>

#include "homalg/homalg.hpp"

inline std::string fixture_path(const std::string& name) { return std::string(HOMALG_FIXTURES) + "/" + name; }

inline homalg::Bundle fixture(const std::string& name) { return homalg::load_bundle(fixture_path(name)); }

inline const char* kFixtureNames[] = {
    "zero.json",        "lie2.json",           "lie2_yau.json",    "premalcev_rb.json",
    "octonions.json",   "split_octonions.json", "quadri_pair.json", "prealt_rb.json",
    "m2_premalcev.json", "hessian.json",        "mdend_table4.json", "mdend_table5.json",
};
