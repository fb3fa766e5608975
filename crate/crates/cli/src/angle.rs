//! Angle literals: `pi`, `-pi/2`, `3pi/4`, `2*pi/3` or plain radians.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, FRAC_PI_8, PI};

pub fn parse_angle(s: &str) -> Result<f64, String> {
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("invalid angle `{s}` (expected radians or a multiple of pi such as pi/2)");
    let Some(at) = text.find("pi") else {
        return text.parse::<f64>().map_err(|_| bad()).and_then(|v| {
            if v.is_finite() {
                Ok(v)
            } else {
                Err(bad())
            }
        });
    };
    let (head, tail) = (&text[..at], &text[at + 2..]);
    let head = head.strip_suffix('*').unwrap_or(head);
    let coeff = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h.parse::<f64>().map_err(|_| bad())?,
    };
    let denom = match tail {
        "" => 1.0,
        t => t
            .strip_prefix('/')
            .and_then(|d| d.parse::<f64>().ok())
            .filter(|d| *d != 0.0)
            .ok_or_else(bad)?,
    };
    // correctly rounded constants where std has them
    let unit = match denom {
        1.0 => PI,
        2.0 => FRAC_PI_2,
        3.0 => FRAC_PI_3,
        4.0 => FRAC_PI_4,
        6.0 => FRAC_PI_6,
        8.0 => FRAC_PI_8,
        d => PI / d,
    };
    let v = coeff * unit;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    #[test]
    fn literals() {
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("pi/2").unwrap(), FRAC_PI_2);
        assert_eq!(parse_angle("pi/3").unwrap(), FRAC_PI_3);
        assert_eq!(parse_angle("pi/4").unwrap(), FRAC_PI_4);
        assert_eq!(parse_angle("-pi/2").unwrap(), -FRAC_PI_2);
        assert_eq!(parse_angle("3pi/4").unwrap(), 3.0 * PI / 4.0);
        assert_eq!(parse_angle("2*pi").unwrap(), 2.0 * PI);
        assert_eq!(parse_angle("0.25").unwrap(), 0.25);
        assert_eq!(parse_angle("-1e-3").unwrap(), -1e-3);
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "tau", "pi/", "pi/0", "xpi", "pi2", "nan", "inf"] {
            assert!(parse_angle(s).is_err(), "{s}");
        }
    }
}
