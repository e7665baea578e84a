//! Unit conversions applied at input parsing. Everything past the parser is SI.

/// Cubic meters per liter.
pub const LITER: f64 = 1e-3;
/// Joules per electron-volt (exact, SI 2019).
pub const ELECTRON_VOLT: f64 = 1.602_176_634e-19;
pub const GEV: f64 = 1e9 * ELECTRON_VOLT;
/// Meters per fermi (femtometer).
pub const FERMI: f64 = 1e-15;
/// Seconds per Julian year.
pub const YEAR: f64 = 365.25 * 86_400.0;
