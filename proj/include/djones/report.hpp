#ifndef DJONES_REPORT_HPP
#define DJONES_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

namespace djones {

struct CheckLine {
    bool pass = false;
    std::string label;  // "knot m n/N" style context
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string title;
    std::vector<CheckLine> lines;

    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    void add(bool pass, std::string label, std::string lhs, std::string rhs) {
        lines.push_back({pass, std::move(label), std::move(lhs), std::move(rhs)});
    }
    std::string text() const {
        std::ostringstream os;
        for (const auto& l : lines)
            os << (l.pass ? "PASS " : "FAIL ") << l.label << " lhs=" << l.lhs
               << " rhs=" << l.rhs << "\n";
        return os.str();
    }
};

}  // namespace djones

#endif
