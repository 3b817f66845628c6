#pragma once

#include <cstdlib>
#include <iostream>
#include <string>

namespace ctw::log {

enum class Level { None = 0, Info = 1, Debug = 2 };

inline Level level() {
    static Level lv = [] {
        const char* e = std::getenv("CTW_LOG");
        if (!e) return Level::None;
        std::string s(e);
        if (s == "debug") return Level::Debug;
        if (s == "info") return Level::Info;
        return Level::None;
    }();
    return lv;
}

inline void info(const std::string& msg) {
    if (level() >= Level::Info) std::cerr << "[ctw] " << msg << "\n";
}

inline void debug(const std::string& msg) {
    if (level() >= Level::Debug) std::cerr << "[ctw:debug] " << msg << "\n";
}

}  // namespace ctw::log
