//! Locale-independent number formatting for CSV output.

/// Formats `x` like C's `%.{digits}g`: `digits` significant digits, trailing
/// zeros removed, scientific notation outside `[1e-4, 1e{digits})`.
pub fn sig(x: f64, digits: usize) -> String {
    assert!(digits > 0);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        format!(
            "{}e{}{:02}",
            trim(mantissa),
            if exp < 0 { '-' } else { '+' },
            exp.abs()
        )
    } else {
        let decimals = (digits as i32 - 1 - exp) as usize;
        trim(&format!("{:.*}", decimals, x)).to_string()
    }
}

/// Twelve significant digits, the precision used by every CSV writer.
pub fn num(x: f64) -> String {
    sig(x, 12)
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g() {
        assert_eq!(num(1.0), "1");
        assert_eq!(num(-0.0), "0");
        assert_eq!(num(0.5), "0.5");
        assert_eq!(num(100.0), "100");
        assert_eq!(num(80.0520080561155), "80.0520080561");
        assert_eq!(num(-84.05460845892), "-84.0546084589");
        assert_eq!(num(1.0 / 3.0), "0.333333333333");
        assert_eq!(num(0.000123456789012345), "0.000123456789012");
        assert_eq!(num(1.5e-5), "1.5e-05");
        assert_eq!(num(1234567890123.0), "1.23456789012e+12");
        assert_eq!(num(999999999999.5), "1e+12");
        assert_eq!(sig(0.99999, 3), "1");
    }
}
