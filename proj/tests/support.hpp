#pragma once

#include <fstream>
#include <sstream>
#include <string>

inline std::string fixture(const std::string& name)
{
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
