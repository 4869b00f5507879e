//! Floating-point shadows of exact scalars, for human-readable reports.
//! The exact values are authoritative; these are display only.

use gvcalc_core::cyclotomic::{CycNumber, Rat};

/// Complex image of a canonical cyclotomic form under `ζ_N ↦ e^{2πi/N}`.
pub fn to_complex(x: &CycNumber) -> (f64, f64) {
    let n = x.order() as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    for (k, c) in x.coeffs().iter().enumerate() {
        let v = rat_to_f64(c);
        if v == 0.0 {
            continue;
        }
        let ang = std::f64::consts::TAU * (k as f64) / n;
        re += v * ang.cos();
        im += v * ang.sin();
    }
    (re, im)
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    let num = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let den = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eighth_root_lands_on_unit_circle() {
        let z = CycNumber::root_of_unity(8, 1).unwrap();
        let (re, im) = to_complex(&z);
        let ang = std::f64::consts::TAU / 8.0;
        assert!((re - ang.cos()).abs() < 1e-12);
        assert!((im - ang.sin()).abs() < 1e-12);
    }
}
