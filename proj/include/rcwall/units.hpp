#pragma once

// Unit conventions. Everything inside the library is SI (m, N, s) with
// temperatures in degrees Celsius; tonne-force and cm appear only at the
// input/report boundary.

namespace rcwall::units {

/// Newtons per tonne-force. The source load tables use 1 t = 10 kN rather
/// than the gravitational 9.80665 kN; only this value reproduces the per-strip
/// loads quoted alongside them (41.2 t over 4.7 m -> 17532 N per 0.2 m).
inline constexpr double newton_per_tonne_force = 1.0e4;

inline constexpr double kelvin_offset = 273.15;
inline constexpr double ambient_celsius = 20.0;
inline constexpr double stefan_boltzmann = 5.67e-8;

constexpr double to_kelvin(double celsius) { return celsius + kelvin_offset; }
constexpr double mm(double v) { return v * 1.0e-3; }
constexpr double cm(double v) { return v * 1.0e-2; }
constexpr double mpa(double v) { return v * 1.0e6; }
constexpr double minutes(double seconds) { return seconds / 60.0; }

}  // namespace rcwall::units
