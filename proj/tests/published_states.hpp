// Copyright 2026 The qenc Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Published six-qubit states used as fixtures. Kets are written with the
// highest qubit first.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qenc::test {

inline std::size_t ket_index(const std::string &bits) { return std::stoul(bits, nullptr, 2); }

// Published six-qubit angle-encoded state of one sample, as (ket, amplitude).
// Two entries are illegible in the source and omitted.
inline const std::vector<std::pair<std::string, double>> kAngleState = {
    {"000000", 0.0572475166}, {"000001", 0.0227939382}, {"000010", 0.1851837702},
    {"000011", 0.0737336334}, {"000100", 0.0254608809}, {"000101", 0.010137623},
    {"000110", 0.0823606366}, {"001000", 0.0297723912}, {"001001", 0.0118543141},
    {"001010", 0.0963074729}, {"001011", 0.0383462325}, {"001100", 0.0132412959},
    {"001101", 0.0052722161}, {"001110", 0.0428328291}, {"001111", 0.0170545189},
    {"010000", 0.2024557566}, {"010001", 0.0806107281}, {"010010", 0.6549021249},
    {"010011", 0.2607588838}, {"010100", 0.0900423669}, {"010101", 0.0358516887},
    {"010110", 0.2912682674}, {"010111", 0.1159727315}, {"011000", 0.1052900169},
    {"011001", 0.0419227641}, {"011010", 0.3405912331}, {"011011", 0.1356113935},
    {"011100", 0.046827823},  {"011101", 0.0186451844}, {"011110", 0.1514782356},
    {"011111", 0.0603132806}, {"100000", 0.0196441865}, {"100001", 0.0078216209},
    {"100010", 0.0635448442}, {"100011", 0.0253013115}, {"100100", 0.0087367684},
    {"100101", 0.0034786724}, {"100110", 0.0282616226}, {"100111", 0.0112527794},
    {"101000", 0.0102162407}, {"101001", 0.004067746},  {"101010", 0.0330474066},
    {"101011", 0.0131583095}, {"101100", 0.0045436816}, {"101101", 0.0018091334},
    {"101110", 0.0146978617}, {"101111", 0.0058521692}, {"110000", 0.0694716361},
    {"110001", 0.0276611506}, {"110010", 0.2247262459}, {"110011", 0.0894780499},
    {"110100", 0.0308975682}, {"110101", 0.0123023198}, {"110111", 0.0397954375},
    {"111000", 0.0361297197}, {"111001", 0.0143855777}, {"111010", 0.1168721039},
    {"111011", 0.0465343419}, {"111100", 0.016068723},  {"111101", 0.0063979977},
    {"111110", 0.0519789659}, {"111111", 0.0206961874},
};

// Published six-qubit hybrid-encoded state: the 16 nonzero amplitudes.
inline const std::vector<std::pair<std::string, std::complex<double>>> kHybridState = {
    {"010000", {0.0249476376, -0.028409179}},   {"010001", {0.0025667674, -0.001521704}},
    {"010010", {0.5105389908, -0.8095017615}},  {"010011", {0.0581060718, -0.0482589257}},
    {"010100", {0.0052418374, -0.0014931241}},  {"010101", {0.0004298537, 1.61444e-5}},
    {"010110", {0.1250916854, -0.0581947923}},  {"010111", {0.0108098288, -0.0013078054}},
    {"011000", {0.009290638, 0.0011240092}},    {"011001", {0.0006696695, 0.0003115417}},
    {"011010", {0.2367238995, -0.0088908486}},  {"011011", {0.0179808531, 0.0051218005}},
    {"011100", {0.0010378214, 0.0008619434}},   {"011101", {5.67983e-5, 9.00584e-5}},
    {"011110", {0.0293753001, 0.0174151004}},   {"011111", {0.0017784046, 0.0020251623}},
};

inline double angle_amp(const std::string &k) {
    for (const auto &[ket, a] : kAngleState) {
        if (ket == k) {
            return a;
        }
    }
    throw std::logic_error("no such ket");
}

inline std::complex<double> hybrid_amp(const std::string &k) {
    for (const auto &[ket, a] : kHybridState) {
        if (ket == k) {
            return a;
        }
    }
    throw std::logic_error("no such ket");
}

/// Angle-encoded product states have |...1_q...>/|0...0> = tan(x_q / 2).
inline std::vector<double> recover_angle_features() {
    const double base = angle_amp("000000");
    std::vector<double> x(6);
    for (std::size_t q = 0; q < 6; ++q) {
        std::string k(6, '0');
        k[5 - q] = '1';
        x[q] = 2 * std::atan(angle_amp(k) / base);
    }
    return x;
}

/// Hybrid magnitudes against |010000> give tan(x_q/2) for q0..q3; the fixed
/// bits q4 = 1 and q5 = 0 require x4 = pi and x5 = 0.
inline std::vector<double> recover_hybrid_features() {
    const double base = std::abs(hybrid_amp("010000"));
    std::vector<double> x(6);
    for (std::size_t q = 0; q < 4; ++q) {
        std::string k = "010000";
        k[5 - q] = '1';
        x[q] = 2 * std::atan(std::abs(hybrid_amp(k)) / base);
    }
    x[4] = 3.14159265358979323846;
    x[5] = 0.0;
    return x;
}

} // namespace qenc::test
