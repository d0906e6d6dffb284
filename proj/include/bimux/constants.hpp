#pragma once

// Compiled-in physical constants. k_B is the 2019 SI exact value;
// atomic masses from the AME2020 evaluation.

namespace bimux {

inline constexpr double k_boltzmann = 1.380649e-23;  // J/K, exact
inline constexpr double mass_rb87 = 1.44316e-25;     // kg, 86.909180 u
inline constexpr double mass_rb85 = 1.40999e-25;     // kg, 84.911790 u
inline constexpr double mass_cs133 = 2.20695e-25;    // kg, 132.905452 u

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double sqrt_pi = 1.77245385090551602730;

}  // namespace bimux
