#pragma once

#include <gtest/gtest.h>

#include <string>

#include "wha/report.hpp"

// Passes when the report has items and none failed; otherwise lists the
// failures with their witnesses.
inline ::testing::AssertionResult Passes(const wha::Report& r) {
    if (r.items.empty()) return ::testing::AssertionFailure() << r.suite << ": empty report";
    if (r.all_pass()) return ::testing::AssertionSuccess();
    auto out = ::testing::AssertionFailure();
    out << r.suite << " failures:\n";
    for (const auto& it : r.items)
        if (it.verdict == wha::Verdict::fail) {
            out << "  " << it.id;
            if (it.witness)
                out << " [" << it.witness->row << " <- " << it.witness->col << ": " << it.witness->lhs << " vs "
                    << it.witness->rhs << "]";
            if (!it.note.empty()) out << " (" << it.note << ")";
            out << "\n";
        }
    return out;
}
