#pragma once

#include <fstream>
#include <random>
#include <string>

#include "tkw/gauss.hpp"
#include "tkw/moves.hpp"

namespace tkwtest {

inline std::string corpus_code(const std::string& name) {
    std::ifstream in(std::string(TKW_CORPUS_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing corpus file " + name);
    std::string line;
    while (std::getline(in, line))
        if (line.empty() || line[0] != '#') return line;
    throw std::runtime_error("no diagram line in " + name);
}

inline tkw::LinearGaussDiagram corpus_diagram(const std::string& name) {
    return tkw::parse_gauss_code(corpus_code(name));
}

}  // namespace tkwtest
